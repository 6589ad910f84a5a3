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

#include "tempocom/community.hpp"
#include "tempocom/network.hpp"
#include "tempocom/slicing.hpp"

namespace tempocom {

inline constexpr double kPivotFraction = 0.25;

/// Pivot-sampled Brandes betweenness, normalized to [0, 1].
///
/// `pivots` sources are drawn without replacement. For vertex v the summed
/// dependencies from pivots other than v are rescaled by
/// (n-1) / |pivots \ {v}|, halved for undirectedness and divided by
/// (n-1)(n-2)/2. With pivots == n this is exact Brandes.
std::vector<double> approximate_betweenness(const SliceGraph& g, int pivots,
                                            std::uint64_t seed);

/// (r-1) / sum of distances within the vertex's component of size r; 0 for an
/// isolated vertex.
std::vector<double> closeness(const SliceGraph& g);

struct NodeDetails {
  NodeId node = 0;
  std::optional<std::string> label;
  double degree = 0.0;
  double closeness = 0.0;
  double betweenness = 0.0;
};

/// Metrics of every member on the community's aggregated graph, in member
/// order. Betweenness uses ceil(0.25 n) pivots.
std::vector<NodeDetails> community_node_metrics(const Community& c, const TemporalNetwork& net,
                                                std::uint64_t seed);

/// Throws Error(kNodeNotInCommunity).
NodeDetails node_details(const Community& c, NodeId v, const TemporalNetwork& net,
                         std::uint64_t seed);

struct CommunityDetails {
  int nodes = 0;
  std::size_t edges = 0;  ///< temporal intra-edges
  Timestamp active_timestamps = 0;
  double activity_percent = 0.0;
};

CommunityDetails community_details(const Community& c, const Timeslice& slice);

}  // namespace tempocom
