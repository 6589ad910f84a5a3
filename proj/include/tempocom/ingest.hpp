/* Copyright 2026 The tempocom Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tempocom/error.hpp"
#include "tempocom/network.hpp"

namespace tempocom {

enum class Delimiter { kAuto, kWhitespace, kComma, kTab };

struct IngestOptions {
  Delimiter delimiter = Delimiter::kAuto;
  bool has_header = false;
  int source_column = 0;
  int target_column = 1;
  int timestamp_column = 2;
};

struct LineIssue {
  std::size_t line = 0;  ///< 1-based
  std::string message;
};

struct EdgeListParse {
  std::vector<EdgeRecord> edges;
  std::vector<LineIssue> issues;
  Delimiter detected = Delimiter::kWhitespace;
};

/// Thrown when an edge list has no usable line; carries every line issue.
class IngestError : public Error {
 public:
  IngestError(const std::string& what, std::vector<LineIssue> issues)
      : Error(ErrorKind::kNoValidEdges, what), issues_(std::move(issues)) {}
  const std::vector<LineIssue>& issues() const { return issues_; }

 private:
  std::vector<LineIssue> issues_;
};

/// Parses a `source target timestamp` edge list. Blank lines and lines
/// starting with '#' are skipped, CRLF is accepted, malformed lines land in
/// `issues`.
///
/// Throws IngestError when no line parses and Error(kInvalidConfig) when the
/// column indices are not distinct.
EdgeListParse parse_edge_list(std::string_view text, const IngestOptions& opts = {});

struct MetadataParse {
  Metadata labels;
  std::vector<LineIssue> issues;  ///< duplicates (last wins) and malformed lines
};

/// Parses `node,label` lines. Never fatal.
MetadataParse parse_metadata(std::string_view text);

/// Canonical text form `source target timestamp\n`, one edge per line.
std::string format_edge_list(const std::vector<EdgeRecord>& edges);

std::string read_file(const std::string& path);

}  // namespace tempocom
