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

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tempocom/slicing.hpp"
#include "tempocom/types.hpp"

namespace tempocom {

/// Simple undirected graph aggregated from temporal edges: parallel
/// timestamps collapse to one edge, self-loops never appear. Vertices are
/// dense local indices mapped to global NodeIds in ascending order.
class SliceGraph {
 public:
  SliceGraph() = default;

  /// Vertex set = endpoints of `edges`.
  static SliceGraph from_edges(std::span<const TemporalEdge> edges);
  /// Vertex set = `members` (sorted); edges with an endpoint outside are ignored.
  static SliceGraph from_members(std::span<const NodeId> members,
                                 std::span<const TemporalEdge> edges);
  /// Local edge list over vertices 0..n-1.
  static SliceGraph from_local_edges(int n, std::span<const std::pair<int, int>> edges);

  int vertex_count() const { return static_cast<int>(nodes_.size()); }
  std::size_t edge_count() const { return adjacency_.size() / 2; }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const int> neighbors(int v) const {
    return {adjacency_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
  }
  NodeId node(int v) const { return nodes_[v]; }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  /// Local index of a global node, if present.
  std::optional<int> local(NodeId id) const;
  bool connected() const;

 private:
  void build(std::vector<std::pair<int, int>> local_edges);

  std::vector<NodeId> nodes_;
  std::vector<int> offsets_{0};
  std::vector<int> adjacency_;
};

/// Community label per SliceGraph vertex, dense from 0.
using Partition = std::vector<int>;

/// Renumbers labels densely in order of first appearance.
Partition normalize(const Partition& p);

/// Newman-Girvan modularity at resolution 1. Throws Error(kEmptyGraph) if the
/// graph has no edges.
double modularity(const Partition& partition, const SliceGraph& g);

struct LouvainResult {
  Partition partition;
  /// Modularity of the projected partition after each level.
  std::vector<double> level_modularity;
  double modularity = 0.0;
};

/// Multi-level Louvain. Vertex visit order is shuffled with `seed`. A graph
/// without edges yields the all-singletons partition and modularity 0.
LouvainResult louvain(const SliceGraph& g, std::uint64_t seed);

struct SliceCommunities {
  std::vector<Community> communities;
  /// Modularity of the full (unfiltered) partition; empty for an edgeless slice.
  std::optional<double> modularity;
};

/// Louvain on the aggregated slice graph, then drops communities smaller than
/// `min_size`. Local ids follow descending size, ties by smallest member.
/// Taxonomy fields are left at their defaults.
SliceCommunities detect_communities(const Timeslice& slice, int min_size, std::uint64_t seed);

struct LinkReport {
  std::vector<EvolutionLink> links;
  /// Candidate links above tau dropped by the two-branch limit.
  std::size_t truncated = 0;
};

/// Matches communities of consecutive slices. Similarity is
/// |A ∩ B| / min(|A|, |B|); candidates need similarity >= tau and a link is
/// kept only if it ranks among the two strongest of both its endpoints
/// (similarity, then overlap, then smaller local id).
LinkReport link_communities(std::span<const Community> prev, std::span<const Community> next,
                            double tau);

/// Louvain on a community's own aggregated graph. The partition is indexed by
/// position in `c.members`.
Partition detect_subcommunities(const Community& c, std::uint64_t seed);

}  // namespace tempocom
