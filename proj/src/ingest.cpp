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

#include "tempocom/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace tempocom {
namespace {

constexpr std::size_t kReportedLines = 10;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

/// Calls fn(line_number, line) for each line with CR stripped.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line_no, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

Delimiter detect(std::string_view line) {
  if (line.find('\t') != std::string_view::npos) return Delimiter::kTab;
  if (line.find(',') != std::string_view::npos) return Delimiter::kComma;
  return Delimiter::kWhitespace;
}

std::vector<std::string_view> split(std::string_view line, Delimiter d) {
  std::vector<std::string_view> out;
  if (d == Delimiter::kWhitespace) {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) out.push_back(line.substr(i, j - i));
      i = j;
    }
    return out;
  }
  const char sep = d == Delimiter::kComma ? ',' : '\t';
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string line_list(const std::vector<LineIssue>& issues) {
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size() && i < kReportedLines; ++i)
    os << (i ? ", " : "") << issues[i].line;
  return os.str();
}

}  // namespace

EdgeListParse parse_edge_list(std::string_view text, const IngestOptions& opts) {
  const int cols[] = {opts.source_column, opts.target_column, opts.timestamp_column};
  if (std::min({cols[0], cols[1], cols[2]}) < 0 || cols[0] == cols[1] || cols[0] == cols[2] ||
      cols[1] == cols[2])
    throw Error(ErrorKind::kInvalidConfig, "edge list column indices must be distinct and >= 0");
  const auto needed = static_cast<std::size_t>(std::max({cols[0], cols[1], cols[2]})) + 1;

  EdgeListParse out;
  Delimiter delim = opts.delimiter;
  bool header_pending = opts.has_header;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (skippable(line)) return;
    if (delim == Delimiter::kAuto) delim = detect(trim(line));
    if (header_pending) {
      header_pending = false;
      return;
    }
    auto fields = split(trim(line), delim);
    if (fields.size() < needed) {
      out.issues.push_back({line_no, "expected at least " + std::to_string(needed) + " fields"});
      return;
    }
    auto src = fields[opts.source_column];
    auto dst = fields[opts.target_column];
    auto ts = fields[opts.timestamp_column];
    if (src.empty() || dst.empty()) {
      out.issues.push_back({line_no, "empty node id"});
      return;
    }
    Timestamp t = 0;
    auto [ptr, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), t);
    if (ec != std::errc{} || ptr != ts.data() + ts.size()) {
      out.issues.push_back({line_no, "non-integer timestamp '" + std::string(ts) + "'"});
      return;
    }
    out.edges.push_back({std::string(src), std::string(dst), t});
  });

  out.detected = delim == Delimiter::kAuto ? Delimiter::kWhitespace : delim;
  if (out.edges.empty()) {
    std::string msg = "no valid edges";
    if (!out.issues.empty()) msg += " (bad lines: " + line_list(out.issues) + ")";
    throw IngestError(msg, std::move(out.issues));
  }
  return out;
}

MetadataParse parse_metadata(std::string_view text) {
  MetadataParse out;
  Delimiter delim = Delimiter::kAuto;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (skippable(line)) return;
    if (delim == Delimiter::kAuto) delim = detect(trim(line));
    auto fields = split(trim(line), delim);
    if (fields.size() < 2 || fields[0].empty() || fields[1].empty()) {
      out.issues.push_back({line_no, "expected 'node,label'"});
      return;
    }
    auto [it, inserted] = out.labels.insert_or_assign(std::string(fields[0]), std::string(fields[1]));
    if (!inserted) out.issues.push_back({line_no, "duplicate node '" + it->first + "', last wins"});
  });
  return out;
}

std::string format_edge_list(const std::vector<EdgeRecord>& edges) {
  std::string out;
  for (const auto& e : edges) {
    out += e.source;
    out += ' ';
    out += e.target;
    out += ' ';
    out += std::to_string(e.timestamp);
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace tempocom
