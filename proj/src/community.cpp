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

#include "tempocom/community.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "random.hpp"
#include "tempocom/error.hpp"

namespace tempocom {

// ---------------------------------------------------------------------------
// SliceGraph

void SliceGraph::build(std::vector<std::pair<int, int>> local_edges) {
  for (auto& [a, b] : local_edges)
    if (a > b) std::swap(a, b);
  std::sort(local_edges.begin(), local_edges.end());
  local_edges.erase(std::unique(local_edges.begin(), local_edges.end()), local_edges.end());

  const int n = vertex_count();
  offsets_.assign(n + 1, 0);
  for (const auto& [a, b] : local_edges) {
    if (a == b) continue;
    ++offsets_[a + 1];
    ++offsets_[b + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.assign(offsets_.back(), 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  // Sorted input keeps each neighbor list sorted.
  for (const auto& [a, b] : local_edges) {
    if (a == b) continue;
    adjacency_[fill[a]++] = b;
  }
  for (const auto& [a, b] : local_edges) {
    if (a == b) continue;
    adjacency_[fill[b]++] = a;
  }
  for (int v = 0; v < n; ++v)
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
}

SliceGraph SliceGraph::from_edges(std::span<const TemporalEdge> edges) {
  SliceGraph g;
  g.nodes_.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    g.nodes_.push_back(e.source);
    g.nodes_.push_back(e.target);
  }
  std::sort(g.nodes_.begin(), g.nodes_.end());
  g.nodes_.erase(std::unique(g.nodes_.begin(), g.nodes_.end()), g.nodes_.end());
  std::vector<std::pair<int, int>> local;
  local.reserve(edges.size());
  for (const auto& e : edges) local.emplace_back(*g.local(e.source), *g.local(e.target));
  g.build(std::move(local));
  return g;
}

SliceGraph SliceGraph::from_members(std::span<const NodeId> members,
                                    std::span<const TemporalEdge> edges) {
  SliceGraph g;
  g.nodes_.assign(members.begin(), members.end());
  std::sort(g.nodes_.begin(), g.nodes_.end());
  g.nodes_.erase(std::unique(g.nodes_.begin(), g.nodes_.end()), g.nodes_.end());
  std::vector<std::pair<int, int>> local;
  for (const auto& e : edges) {
    auto a = g.local(e.source);
    auto b = g.local(e.target);
    if (a && b) local.emplace_back(*a, *b);
  }
  g.build(std::move(local));
  return g;
}

SliceGraph SliceGraph::from_local_edges(int n, std::span<const std::pair<int, int>> edges) {
  SliceGraph g;
  g.nodes_.resize(n);
  std::iota(g.nodes_.begin(), g.nodes_.end(), NodeId{0});
  g.build({edges.begin(), edges.end()});
  return g;
}

std::optional<int> SliceGraph::local(NodeId id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - nodes_.begin());
}

bool SliceGraph::connected() const {
  const int n = vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = true;
      ++reached;
      stack.push_back(u);
    }
  }
  return reached == n;
}

// ---------------------------------------------------------------------------
// Modularity

Partition normalize(const Partition& p) {
  std::unordered_map<int, int> remap;
  Partition out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto [it, inserted] = remap.emplace(p[i], static_cast<int>(remap.size()));
    out[i] = it->second;
  }
  return out;
}

double modularity(const Partition& partition, const SliceGraph& g) {
  const auto m = static_cast<double>(g.edge_count());
  if (m == 0) throw Error(ErrorKind::kEmptyGraph, "modularity of a graph without edges");
  const int n = g.vertex_count();
  const int labels = n == 0 ? 0 : *std::max_element(partition.begin(), partition.end()) + 1;
  std::vector<double> in(labels, 0.0), deg(labels, 0.0);
  for (int v = 0; v < n; ++v) {
    deg[partition[v]] += g.degree(v);
    for (int u : g.neighbors(v))
      if (u > v && partition[u] == partition[v]) in[partition[v]] += 1.0;
  }
  double q = 0.0;
  for (int c = 0; c < labels; ++c) q += in[c] / m - (deg[c] / (2 * m)) * (deg[c] / (2 * m));
  return q;
}

// ---------------------------------------------------------------------------
// Louvain

namespace {

/// Weighted graph of one Louvain level. `loops[i]` is the weight of edges
/// folded inside super-vertex i, so its degree is the neighbor weight plus
/// twice the loop weight.
struct LevelGraph {
  int n = 0;
  std::vector<int> offsets;
  std::vector<int> targets;
  std::vector<double> weights;
  std::vector<double> loops;
  std::vector<double> degree;
  double total = 0.0;  // 2m
};

LevelGraph level_from(const SliceGraph& g) {
  LevelGraph lg;
  lg.n = g.vertex_count();
  lg.offsets.assign(lg.n + 1, 0);
  lg.loops.assign(lg.n, 0.0);
  lg.degree.assign(lg.n, 0.0);
  for (int v = 0; v < lg.n; ++v) {
    lg.offsets[v + 1] = lg.offsets[v] + g.degree(v);
    for (int u : g.neighbors(v)) {
      lg.targets.push_back(u);
      lg.weights.push_back(1.0);
    }
    lg.degree[v] = g.degree(v);
    lg.total += g.degree(v);
  }
  return lg;
}

LevelGraph aggregate(const LevelGraph& g, const std::vector<int>& comm, int count) {
  std::vector<std::tuple<int, int, double>> edges;
  LevelGraph out;
  out.n = count;
  out.loops.assign(count, 0.0);
  out.degree.assign(count, 0.0);
  for (int v = 0; v < g.n; ++v) {
    out.loops[comm[v]] += g.loops[v];
    out.degree[comm[v]] += g.degree[v];
    for (int e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
      int u = g.targets[e];
      if (u < v) continue;
      int a = comm[v], b = comm[u];
      if (a == b) {
        out.loops[a] += g.weights[e];
      } else {
        edges.emplace_back(std::min(a, b), std::max(a, b), g.weights[e]);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  std::vector<std::tuple<int, int, double>> merged;
  for (const auto& e : edges) {
    if (!merged.empty() && std::get<0>(merged.back()) == std::get<0>(e) &&
        std::get<1>(merged.back()) == std::get<1>(e)) {
      std::get<2>(merged.back()) += std::get<2>(e);
    } else {
      merged.push_back(e);
    }
  }
  out.offsets.assign(count + 1, 0);
  for (const auto& [a, b, w] : merged) {
    ++out.offsets[a + 1];
    ++out.offsets[b + 1];
  }
  std::partial_sum(out.offsets.begin(), out.offsets.end(), out.offsets.begin());
  out.targets.assign(out.offsets.back(), 0);
  out.weights.assign(out.offsets.back(), 0.0);
  std::vector<int> fill(out.offsets.begin(), out.offsets.end() - 1);
  for (const auto& [a, b, w] : merged) {
    out.targets[fill[a]] = b;
    out.weights[fill[a]++] = w;
    out.targets[fill[b]] = a;
    out.weights[fill[b]++] = w;
  }
  out.total = g.total;
  return out;
}

/// Local moving phase. Returns true if any vertex changed community.
bool move_vertices(const LevelGraph& g, std::vector<int>& comm, detail::Rng& rng) {
  constexpr double kMinGain = 1e-12;
  std::vector<double> tot(g.degree);
  std::vector<double> link(g.n, -1.0);
  std::vector<int> touched;
  const auto order = detail::permutation(g.n, rng);
  bool any = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v : order) {
      const int own = comm[v];
      const double k = g.degree[v];
      touched.clear();
      for (int e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
        int c = comm[g.targets[e]];
        if (link[c] < 0) {
          link[c] = 0.0;
          touched.push_back(c);
        }
        link[c] += g.weights[e];
      }
      tot[own] -= k;
      int best = own;
      double best_gain = (link[own] < 0 ? 0.0 : link[own]) - tot[own] * k / g.total;
      for (int c : touched) {
        double gain = link[c] - tot[c] * k / g.total;
        if (gain > best_gain + kMinGain) {
          best = c;
          best_gain = gain;
        }
      }
      tot[best] += k;
      comm[v] = best;
      if (best != own) moved = any = true;
      for (int c : touched) link[c] = -1.0;
    }
  }
  return any;
}

}  // namespace

LouvainResult louvain(const SliceGraph& g, std::uint64_t seed) {
  LouvainResult out;
  const int n = g.vertex_count();
  out.partition.resize(n);
  std::iota(out.partition.begin(), out.partition.end(), 0);
  if (g.edge_count() == 0) return out;

  detail::Rng rng(seed);
  LevelGraph level = level_from(g);
  out.modularity = modularity(out.partition, g);
  while (true) {
    std::vector<int> comm(level.n);
    std::iota(comm.begin(), comm.end(), 0);
    if (!move_vertices(level, comm, rng)) break;
    // Dense relabel in order of first appearance.
    std::vector<int> remap(level.n, -1);
    int count = 0;
    for (int& c : comm) {
      if (remap[c] < 0) remap[c] = count++;
      c = remap[c];
    }
    for (int& p : out.partition) p = comm[p];
    out.level_modularity.push_back(modularity(out.partition, g));
    out.modularity = out.level_modularity.back();
    if (count == level.n) break;
    level = aggregate(level, comm, count);
  }
  out.partition = normalize(out.partition);
  return out;
}

// ---------------------------------------------------------------------------
// Per-slice detection

SliceCommunities detect_communities(const Timeslice& slice, int min_size, std::uint64_t seed) {
  if (min_size < 1) throw Error(ErrorKind::kInvalidConfig, "min community size must be >= 1");
  SliceCommunities out;
  if (slice.edges.empty()) return out;

  const SliceGraph g = SliceGraph::from_edges(slice.edges);
  const LouvainResult lv = louvain(g, seed);
  out.modularity = lv.modularity;

  const int labels = *std::max_element(lv.partition.begin(), lv.partition.end()) + 1;
  std::vector<std::vector<NodeId>> groups(labels);
  for (int v = 0; v < g.vertex_count(); ++v) groups[lv.partition[v]].push_back(g.node(v));

  std::vector<int> kept;
  for (int c = 0; c < labels; ++c)
    if (static_cast<int>(groups[c].size()) >= min_size) kept.push_back(c);
  std::sort(kept.begin(), kept.end(), [&](int a, int b) {
    if (groups[a].size() != groups[b].size()) return groups[a].size() > groups[b].size();
    return groups[a].front() < groups[b].front();
  });

  std::vector<int> local_of(labels, -1);
  out.communities.resize(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    local_of[kept[i]] = static_cast<int>(i);
    auto& c = out.communities[i];
    c.key = {slice.index, static_cast<int>(i)};
    c.members = std::move(groups[kept[i]]);
  }
  for (const auto& e : slice.edges) {
    const int a = lv.partition[*g.local(e.source)];
    if (a != lv.partition[*g.local(e.target)] || local_of[a] < 0) continue;
    out.communities[local_of[a]].intra_edges.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cross-slice linking

LinkReport link_communities(std::span<const Community> prev, std::span<const Community> next,
                            double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) throw Error(ErrorKind::kInvalidConfig, "tau must be in (0, 1]");
  std::unordered_map<NodeId, int> owner;
  for (std::size_t j = 0; j < next.size(); ++j)
    for (NodeId v : next[j].members) owner.emplace(v, static_cast<int>(j));

  struct Candidate {
    int from, to, overlap;
    double similarity;
  };
  std::vector<Candidate> cands;
  std::vector<int> counts(next.size());
  for (std::size_t i = 0; i < prev.size(); ++i) {
    std::fill(counts.begin(), counts.end(), 0);
    for (NodeId v : prev[i].members) {
      auto it = owner.find(v);
      if (it != owner.end()) ++counts[it->second];
    }
    for (std::size_t j = 0; j < next.size(); ++j) {
      if (counts[j] == 0) continue;
      const double s = static_cast<double>(counts[j]) /
                       static_cast<double>(std::min(prev[i].size(), next[j].size()));
      if (s + 1e-12 >= tau)
        cands.push_back({static_cast<int>(i), static_cast<int>(j), counts[j], s});
    }
  }

  // A candidate survives if it is among the two strongest of its "from" and
  // among the two strongest of its "to".
  auto stronger = [&](const Candidate& a, const Candidate& b, bool by_to) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    if (a.overlap != b.overlap) return a.overlap > b.overlap;
    const int la = by_to ? prev[a.from].key.local : next[a.to].key.local;
    const int lb = by_to ? prev[b.from].key.local : next[b.to].key.local;
    return la < lb;
  };
  std::vector<int> from_rank(cands.size()), to_rank(cands.size());
  for (std::size_t a = 0; a < cands.size(); ++a) {
    for (std::size_t b = 0; b < cands.size(); ++b) {
      if (a == b) continue;
      if (cands[a].from == cands[b].from && stronger(cands[b], cands[a], false)) ++from_rank[a];
      if (cands[a].to == cands[b].to && stronger(cands[b], cands[a], true)) ++to_rank[a];
    }
  }

  LinkReport out;
  std::vector<int> out_degree(prev.size()), in_degree(next.size());
  std::vector<Candidate> kept;
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (from_rank[a] < 2 && to_rank[a] < 2) {
      kept.push_back(cands[a]);
      ++out_degree[cands[a].from];
      ++in_degree[cands[a].to];
    } else {
      ++out.truncated;
    }
  }
  for (const auto& c : kept) {
    EvolutionLink l;
    l.from = prev[c.from].key;
    l.to = next[c.to].key;
    l.overlap = c.overlap;
    l.similarity = c.similarity;
    const int a = prev[c.from].size(), b = next[c.to].size();
    l.change = b == a ? SizeChange::kPreserve : (b > a ? SizeChange::kGrow : SizeChange::kContract);
    l.split_branch = out_degree[c.from] == 2;
    l.merge_branch = in_degree[c.to] == 2;
    out.links.push_back(l);
  }
  std::sort(out.links.begin(), out.links.end(), [](const EvolutionLink& a, const EvolutionLink& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  return out;
}

Partition detect_subcommunities(const Community& c, std::uint64_t seed) {
  const SliceGraph g = SliceGraph::from_members(c.members, c.intra_edges);
  return louvain(g, seed).partition;
}

}  // namespace tempocom
