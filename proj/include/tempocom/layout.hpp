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
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tempocom/community.hpp"
#include "tempocom/network.hpp"
#include "tempocom/slicing.hpp"
#include "tempocom/types.hpp"

namespace tempocom {

// ---------------------------------------------------------------------------
// Global View grid

struct GridLink {
  CommunityKey from;
  CommunityKey to;
  int from_row = 0;
  int to_row = 0;
  int thickness = 0;  ///< node overlap
};

/// Rows per column. Column c (0-based) holds slice c+1; `row_of[c][local]` is
/// the row of community (c+1, local). Rows are distinct within a column and
/// lie in 0..rows-1, so a column with fewer communities than `rows` leaves
/// empty cells.
struct GridLayout {
  int rows = 0;  ///< capacity: the largest column
  std::vector<std::vector<int>> row_of;
  std::vector<GridLink> links;

  int row(CommunityKey k) const { return row_of.at(k.slice - 1).at(k.local); }
};

struct GridOptions {
  bool merge_swap = true;
  /// Finish with pairwise row exchanges that shorten links.
  bool refine = true;
};

/// Link-length reduction placement.
///
/// Column 1 keeps appearance (local id) order. In each later column the
/// targets of one-to-one Preserve links take the row of their "from". The
/// other "to" communities of the previous column's "from"s, visited in row
/// order, go to the free row closest to the "from" (ties toward the smaller
/// row); the remaining communities fill the free rows in appearance order.
/// Merge diagonals are then shortened by swapping the farther "from" with the
/// unlinked community nearest the closer "from", when the swap shortens the
/// links around that column and moves no Preserve-chain member. Finally,
/// with `refine`, communities off the Preserve chains in columns 2 onward
/// exchange rows pairwise while that shortens their links.
GridLayout global_grid_positions(std::span<const int> communities_per_slice,
                                 std::span<const EvolutionLink> links,
                                 const GridOptions& opts = {});

/// Every column in appearance order; the baseline the placement is judged
/// against.
GridLayout appearance_order_grid(std::span<const int> communities_per_slice,
                                 std::span<const EvolutionLink> links);

/// Sum of Euclidean link lengths on unit-spaced (column, row) coordinates.
double total_link_length(const GridLayout& grid);

// ---------------------------------------------------------------------------
// Node-link geometry

/// Row v holds the (x, y) position of graph vertex v, inside the unit square.
using NodePositions = Eigen::MatrixX2d;

struct SpringOptions {
  int iterations = 300;
  double initial_temperature = 0.1;
};

/// Fruchterman-Reingold from a seeded random start with linear cooling. The
/// result is centered on (0.5, 0.5) and shrunk uniformly when it does not
/// fit the unit square.
NodePositions spring_layout(const SliceGraph& g, std::uint64_t seed,
                            const SpringOptions& opts = {});

struct Supernode {
  int id = 0;
  std::vector<NodeId> members;
  std::optional<std::string> label;  ///< predominant metadata label
  int size() const { return static_cast<int>(members.size()); }
};

struct Superedge {
  int a = 0;
  int b = 0;
  int weight = 0;  ///< distinct aggregated edges between the two groups
};

struct SuperGraph {
  std::vector<Supernode> supernodes;
  std::vector<Superedge> superedges;
  NodePositions positions;  ///< one row per supernode
};

/// Sub-community summary of a large community. Throws Error(kBelowThreshold)
/// when the community has at most `node_threshold` members.
SuperGraph summarize_supernodes(const Community& c, const TemporalNetwork& net,
                                int node_threshold, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Temporal activity map

struct TamRow {
  NodeId node = 0;
  std::vector<Timestamp> active;  ///< sorted timestamps with an intra-edge
};

struct TamView {
  std::vector<TamRow> rows;
  Timestamp t_start = 0;
  /// Intra-edge count per timestamp over the slice span.
  std::vector<int> edge_series;
};

/// Rows ordered by (metadata label, first activity, node id); nodes without a
/// label sort after labelled ones.
TamView tam_rows(const Community& c, const Timeslice& slice, const TemporalNetwork& net);

}  // namespace tempocom
