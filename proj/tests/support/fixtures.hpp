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

// Graph and network builders shared by the unit and acceptance tests.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tempocom/analysis.hpp"
#include "tempocom/community.hpp"
#include "tempocom/network.hpp"

namespace tempocom::testing {

using Edges = std::vector<std::pair<int, int>>;

Edges complete(int n);
Edges cycle(int n);
Edges path(int n);
Edges star(int n);              ///< vertex 0 is the hub
Edges binary_tree(int n);       ///< heap numbering, parent of i is (i-1)/2
Edges ladder(int n);            ///< 2 x n/2 grid, n even
Edges gnp(int n, double p, std::uint64_t seed);

Edges with_edge(Edges e, int a, int b);
Edges without_edge(Edges e, int a, int b);

SliceGraph graph(int n, const Edges& e);

/// Community over node ids 0..n-1 (names "n00", ...). Every aggregated edge
/// appears once at `t`.
Community community_of(int n, const Edges& e, Timestamp t = 0, CommunityKey key = {1, 0});

/// Community from explicit members; intra edges are left empty.
Community members_only(CommunityKey key, std::vector<NodeId> members);

/// Network with node names "n00", "n01", ... for the given (a, b, t) triples.
TemporalNetwork network_of(const std::vector<std::tuple<int, int, Timestamp>>& edges,
                           const Metadata& metadata = {});

/// Two cliques of sizes a and b plus one bridge, with vertex ids shuffled.
/// `planted[v]` is 0 or 1.
struct PlantedFixture {
  int n = 0;
  Edges edges;
  std::vector<int> planted;
};
PlantedFixture planted_two_cliques(std::uint64_t seed);

/// Synthetic face-to-face contact network shaped like a two-day school record:
/// `classes` groups that mostly talk inside the group, daily lunch mixing, and
/// a silent night. Node ids are "<class>_<k>" and metadata holds the class.
struct ContactSpec {
  int classes = 10;
  int per_class = 23;
  int teachers = 12;
  Timestamp days = 2;
  Timestamp steps_per_day = 2923;
  Timestamp night = 1500;
  double intra_rate = 9.0;   ///< expected intra-class contacts per active step
  double inter_rate = 0.8;   ///< outside lunch
  double lunch_rate = 12.0;  ///< inter-class contacts per lunch step
  std::uint64_t seed = 7;
};
struct ContactNetwork {
  std::vector<EdgeRecord> edges;
  Metadata labels;
};
ContactNetwork school_contacts(const ContactSpec& spec);

/// Sparse bursty interaction stream: `nodes` accounts, `edges` interactions
/// grouped in small short-lived clusters over `span` timestamps.
std::vector<EdgeRecord> bursty_stream(int nodes, int edges, Timestamp span, std::uint64_t seed);

}  // namespace tempocom::testing
