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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tempocom/types.hpp"

namespace tempocom {

/// Edge as it appears in an input file: opaque string endpoints.
struct EdgeRecord {
  std::string source;
  std::string target;
  Timestamp timestamp = 0;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

using Metadata = std::map<std::string, std::string>;

/// Side information collected while building a network.
struct BuildReport {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
  std::vector<std::string> dropped_metadata_keys;
};

/// Immutable undirected temporal network.
///
/// Node ids are interned in lexicographic order of their names, so NodeId
/// order and name order agree. Edges are deduplicated and kept in the
/// canonical (timestamp, min-id, max-id) order, which makes construction
/// independent of the input edge order.
class TemporalNetwork {
 public:
  std::size_t node_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const TemporalEdge> edges() const { return edges_; }
  const std::vector<std::string>& node_names() const { return names_; }
  const std::string& node_name(NodeId id) const { return names_.at(id); }
  std::optional<NodeId> find_node(const std::string& name) const;

  Timestamp t_min() const { return t_min_; }
  Timestamp t_max() const { return t_max_; }
  /// Number of timestamps in the inclusive observation range.
  Timestamp span() const { return t_max_ - t_min_ + 1; }

  bool has_metadata() const { return has_metadata_; }
  /// Empty optional when the node carries no label.
  const std::optional<std::string>& label(NodeId id) const { return labels_.at(id); }

  /// Edges converted back to name-based records, in canonical order.
  std::vector<EdgeRecord> to_records() const;
  Metadata metadata() const;

  friend bool operator==(const TemporalNetwork& a, const TemporalNetwork& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_ && a.labels_ == b.labels_ &&
           a.t_min_ == b.t_min_ && a.t_max_ == b.t_max_;
  }

 private:
  friend TemporalNetwork build_network(std::span<const EdgeRecord>, const Metadata&,
                                       BuildReport*);

  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<TemporalEdge> edges_;
  std::vector<std::optional<std::string>> labels_;
  bool has_metadata_ = false;
  Timestamp t_min_ = 0;
  Timestamp t_max_ = 0;
};

/// Builds a network from raw edges. Self-loops are dropped, duplicate
/// (a,b,t) edges collapse to one and metadata keys that are not nodes are
/// dropped; all three are counted in `report`.
///
/// Throws Error(kEmptyNetwork) when no valid edge remains.
TemporalNetwork build_network(std::span<const EdgeRecord> edges, const Metadata& metadata = {},
                              BuildReport* report = nullptr);

struct NetworkSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t timestamps = 0;  ///< distinct timestamps with at least one edge
  Timestamp t_min = 0;
  Timestamp t_max = 0;
  std::vector<std::string> categories;  ///< sorted distinct metadata labels
};

NetworkSummary network_summary(const TemporalNetwork& net);

}  // namespace tempocom
