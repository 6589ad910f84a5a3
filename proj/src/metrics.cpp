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

#include "tempocom/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "random.hpp"
#include "tempocom/error.hpp"
#include "tempocom/taxonomy.hpp"

namespace tempocom {

std::vector<double> approximate_betweenness(const SliceGraph& g, int pivots, std::uint64_t seed) {
  const int n = g.vertex_count();
  std::vector<double> out(n, 0.0);
  if (n < 3) return out;
  pivots = std::clamp(pivots, 1, n);

  detail::Rng rng(seed);
  auto order = detail::permutation(n, rng);
  order.resize(pivots);
  std::vector<bool> is_pivot(n, false);
  for (int s : order) is_pivot[s] = true;

  std::vector<double> dependency_sum(n, 0.0);
  std::vector<int> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<int> stack;
  stack.reserve(n);
  std::queue<int> queue;
  for (int s : order) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    stack.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      stack.push_back(v);
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      const int w = *it;
      for (int v : g.neighbors(w))
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) dependency_sum[w] += delta[w];
    }
  }

  const double pairs = static_cast<double>(n - 1) * (n - 2) / 2.0;
  for (int v = 0; v < n; ++v) {
    const int sources = pivots - (is_pivot[v] ? 1 : 0);
    if (sources == 0) continue;
    const double estimate = dependency_sum[v] * (n - 1) / sources / 2.0;
    out[v] = std::clamp(estimate / pairs, 0.0, 1.0);
  }
  return out;
}

std::vector<double> closeness(const SliceGraph& g) {
  const int n = g.vertex_count();
  std::vector<double> out(n, 0.0);
  std::vector<int> dist(n);
  std::queue<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.push(s);
    long long total = 0;
    int reached = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      total += dist[v];
      ++reached;
      for (int w : g.neighbors(v)) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
    if (total > 0) out[s] = static_cast<double>(reached - 1) / static_cast<double>(total);
  }
  return out;
}

std::vector<NodeDetails> community_node_metrics(const Community& c, const TemporalNetwork& net,
                                                std::uint64_t seed) {
  const SliceGraph g = SliceGraph::from_members(c.members, c.intra_edges);
  const int n = g.vertex_count();
  const int pivots = static_cast<int>(std::ceil(kPivotFraction * n));
  const auto between = approximate_betweenness(g, pivots, seed);
  const auto close = closeness(g);
  std::vector<NodeDetails> out(n);
  for (int v = 0; v < n; ++v) {
    auto& d = out[v];
    d.node = g.node(v);
    d.label = net.label(d.node);
    d.degree = n > 1 ? static_cast<double>(g.degree(v)) / (n - 1) : 0.0;
    d.closeness = close[v];
    d.betweenness = between[v];
  }
  return out;
}

NodeDetails node_details(const Community& c, NodeId v, const TemporalNetwork& net,
                         std::uint64_t seed) {
  auto it = std::lower_bound(c.members.begin(), c.members.end(), v);
  if (it == c.members.end() || *it != v)
    throw Error(ErrorKind::kNodeNotInCommunity, "node is not a member of the community");
  return community_node_metrics(c, net, seed)[it - c.members.begin()];
}

CommunityDetails community_details(const Community& c, const Timeslice& slice) {
  const TemporalStats s = temporal_stats(c.intra_edges, slice);
  CommunityDetails d;
  d.nodes = c.size();
  d.edges = c.intra_edges.size();
  d.active_timestamps = s.active;
  d.activity_percent = 100.0 * static_cast<double>(s.active) / static_cast<double>(s.slice_length);
  return d;
}

}  // namespace tempocom
