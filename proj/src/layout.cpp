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

#include "tempocom/layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include "random.hpp"
#include "tempocom/error.hpp"

namespace tempocom {

// ---------------------------------------------------------------------------
// Global View grid

namespace {

double link_length(int from_row, int to_row) {
  const double dr = to_row - from_row;
  return std::sqrt(1.0 + dr * dr);
}

GridLayout empty_grid(std::span<const int> counts) {
  GridLayout g;
  g.rows = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  g.row_of.resize(counts.size());
  for (std::size_t c = 0; c < counts.size(); ++c) {
    g.row_of[c].resize(counts[c]);
    std::iota(g.row_of[c].begin(), g.row_of[c].end(), 0);
  }
  return g;
}

void attach_links(GridLayout& g, std::span<const EvolutionLink> links) {
  g.links.clear();
  for (const auto& l : links)
    g.links.push_back({l.from, l.to, g.row(l.from), g.row(l.to), l.overlap});
}

/// Length of the links touching column `col` (0-based).
double column_length(const GridLayout& g, std::span<const EvolutionLink> links, int col) {
  double total = 0.0;
  for (const auto& l : links)
    if (l.from.slice - 1 == col || l.to.slice - 1 == col)
      total += link_length(g.row(l.from), g.row(l.to));
  return total;
}

/// A one-to-one Preserve link: the "to" keeps the row of the "from".
bool keeps_row(const EvolutionLink& l) {
  return l.change == SizeChange::kPreserve && !l.split_branch && !l.merge_branch;
}

void check_links(std::span<const int> counts, std::span<const EvolutionLink> links) {
  const auto cols = static_cast<int>(counts.size());
  for (const auto& l : links) {
    if (l.to.slice != l.from.slice + 1 || l.from.slice < 1 || l.to.slice > cols ||
        l.from.local < 0 || l.from.local >= counts[l.from.slice - 1] || l.to.local < 0 ||
        l.to.local >= counts[l.to.slice - 1])
      throw Error(ErrorKind::kInvalidConfig, "link does not join adjacent grid columns");
  }
}


/// Pairwise row exchanges inside each column after the first, kept only when
/// they shorten the links touching the exchanged communities. Communities on
/// an intact Preserve chain never move. Empty rows take part as free slots.
void refine_rows(GridLayout& g, std::span<const EvolutionLink> links) {
  const auto cols = static_cast<int>(g.row_of.size());
  std::vector<std::vector<std::vector<const EvolutionLink*>>> incident(cols);
  std::vector<std::vector<bool>> fixed(cols);
  for (int c = 0; c < cols; ++c) {
    incident[c].resize(g.row_of[c].size());
    fixed[c].assign(g.row_of[c].size(), c == 0);
  }
  for (const auto& l : links) {
    incident[l.from.slice - 1][l.from.local].push_back(&l);
    incident[l.to.slice - 1][l.to.local].push_back(&l);
    if (keeps_row(l) && g.row(l.from) == g.row(l.to)) {
      fixed[l.from.slice - 1][l.from.local] = true;
      fixed[l.to.slice - 1][l.to.local] = true;
    }
  }
  auto local_length = [&](int c, int local) {
    double total = 0.0;
    for (const auto* l : incident[c][local]) total += link_length(g.row(l->from), g.row(l->to));
    return total;
  };

  constexpr int kMaxSweeps = 8;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool improved = false;
    for (int c = 1; c < cols; ++c) {
      auto& rows = g.row_of[c];
      std::vector<int> at(g.rows, -1);
      for (std::size_t local = 0; local < rows.size(); ++local) at[rows[local]] = static_cast<int>(local);
      for (int r1 = 0; r1 < g.rows; ++r1)
        for (int r2 = r1 + 1; r2 < g.rows; ++r2) {
          const int a = at[r1], b = at[r2];
          if ((a < 0 && b < 0) || (a >= 0 && fixed[c][a]) || (b >= 0 && fixed[c][b])) continue;
          auto both = [&] {
            return (a >= 0 ? local_length(c, a) : 0.0) + (b >= 0 ? local_length(c, b) : 0.0);
          };
          const double before = both();
          if (a >= 0) rows[a] = r2;
          if (b >= 0) rows[b] = r1;
          if (both() + 1e-12 < before) {
            std::swap(at[r1], at[r2]);
            improved = true;
          } else {
            if (a >= 0) rows[a] = r1;
            if (b >= 0) rows[b] = r2;
          }
        }
    }
    if (!improved) break;
  }
}

}  // namespace

GridLayout appearance_order_grid(std::span<const int> communities_per_slice,
                                 std::span<const EvolutionLink> links) {
  check_links(communities_per_slice, links);
  GridLayout g = empty_grid(communities_per_slice);
  attach_links(g, links);
  return g;
}

GridLayout global_grid_positions(std::span<const int> communities_per_slice,
                                 std::span<const EvolutionLink> links, const GridOptions& opts) {
  check_links(communities_per_slice, links);
  GridLayout g = empty_grid(communities_per_slice);
  const auto cols = static_cast<int>(communities_per_slice.size());

  // Links grouped by the 0-based column of their "from".
  std::vector<std::vector<const EvolutionLink*>> outgoing(cols);
  for (const auto& l : links) outgoing[l.from.slice - 1].push_back(&l);

  for (int x = 1; x < cols; ++x) {
    const int count = communities_per_slice[x];
    const int prev_count = communities_per_slice[x - 1];
    auto& rows = g.row_of[x];
    std::fill(rows.begin(), rows.end(), -1);
    std::vector<bool> taken(g.rows, false);
    auto place = [&](int local, int row) {
      rows[local] = row;
      taken[row] = true;
    };

    // One-to-one Preserve links keep their row. Linker output never has two
    // of them sharing an endpoint; hand-built inputs fall through to the
    // nearest-row pass instead.
    for (const auto* l : outgoing[x - 1]) {
      if (!keeps_row(*l)) continue;
      const int row = g.row_of[x - 1][l->from.local];
      if (rows[l->to.local] < 0 && !taken[row]) place(l->to.local, row);
    }

    std::vector<int> from_order(prev_count);
    std::iota(from_order.begin(), from_order.end(), 0);
    std::sort(from_order.begin(), from_order.end(),
              [&](int a, int b) { return g.row_of[x - 1][a] < g.row_of[x - 1][b]; });

    std::vector<std::vector<const EvolutionLink*>> by_from(prev_count);
    for (const auto* l : outgoing[x - 1]) by_from[l->from.local].push_back(l);
    for (auto& v : by_from)
      std::sort(v.begin(), v.end(), [](const EvolutionLink* a, const EvolutionLink* b) {
        if (a->overlap != b->overlap) return a->overlap > b->overlap;
        return a->to.local < b->to.local;
      });

    for (int from : from_order) {
      const int from_row = g.row_of[x - 1][from];
      for (const auto* l : by_from[from]) {
        if (rows[l->to.local] >= 0) continue;
        int best = -1;
        for (int r = 0; r < g.rows; ++r) {
          if (taken[r]) continue;
          if (best < 0 || std::abs(r - from_row) < std::abs(best - from_row)) best = r;
        }
        place(l->to.local, best);
      }
    }
    int next_free = 0;
    for (int local = 0; local < count; ++local) {
      if (rows[local] >= 0) continue;
      while (taken[next_free]) ++next_free;
      place(local, next_free);
    }

    if (!opts.merge_swap) continue;

    std::vector<bool> linked(prev_count, false);
    std::vector<bool> pinned(prev_count, false);
    if (x >= 2)
      for (const auto* l : outgoing[x - 2])
        if (keeps_row(*l)) pinned[l->to.local] = true;
    std::vector<std::vector<int>> merge_froms(count);
    for (const auto* l : outgoing[x - 1]) {
      linked[l->from.local] = true;
      if (l->merge_branch) merge_froms[l->to.local].push_back(l->from.local);
    }
    for (int to = 0; to < count; ++to) {
      if (merge_froms[to].size() != 2) continue;
      auto& prev_rows = g.row_of[x - 1];
      int a = merge_froms[to][0], b = merge_froms[to][1];
      const int to_row = rows[to];
      auto dist = [&](int local) { return std::abs(prev_rows[local] - to_row); };
      if (dist(a) < dist(b) || (dist(a) == dist(b) && prev_rows[a] > prev_rows[b])) std::swap(a, b);
      const int far = a, close = b;
      if (pinned[far]) continue;

      int swap_with = -1;
      for (int q = 0; q < prev_count; ++q) {
        if (linked[q] || pinned[q]) continue;
        const int dq = std::abs(prev_rows[q] - prev_rows[close]);
        if (swap_with < 0 || dq < std::abs(prev_rows[swap_with] - prev_rows[close]) ||
            (dq == std::abs(prev_rows[swap_with] - prev_rows[close]) &&
             prev_rows[q] < prev_rows[swap_with]))
          swap_with = q;
      }
      if (swap_with < 0) continue;

      // Only keep swaps that shorten the links around the previous column.
      const double before = column_length(g, links, x - 1);
      std::swap(prev_rows[far], prev_rows[swap_with]);
      if (column_length(g, links, x - 1) + 1e-12 >= before)
        std::swap(prev_rows[far], prev_rows[swap_with]);
    }
  }
  if (opts.refine) refine_rows(g, links);
  attach_links(g, links);
  return g;
}

double total_link_length(const GridLayout& grid) {
  double total = 0.0;
  for (const auto& l : grid.links) total += link_length(l.from_row, l.to_row);
  return total;
}

// ---------------------------------------------------------------------------
// Fruchterman-Reingold

namespace {

constexpr int kExactRepulsionLimit = 1000;

void normalize_unit_square(NodePositions& pos) {
  const Eigen::RowVector2d lo = pos.colwise().minCoeff();
  const Eigen::RowVector2d hi = pos.colwise().maxCoeff();
  const Eigen::RowVector2d center = 0.5 * (lo + hi);
  const double extent = (hi - lo).maxCoeff();
  const double scale = extent > 1.0 ? 1.0 / extent : 1.0;
  pos = ((pos.rowwise() - center) * scale).rowwise() + Eigen::RowVector2d(0.5, 0.5);
}

void add_repulsion(const NodePositions& pos, int i, int j, double k2, NodePositions& disp) {
  Eigen::RowVector2d delta = pos.row(i) - pos.row(j);
  double d = delta.norm();
  if (d < 1e-9) {
    // Coincident points: push apart along a fixed index-dependent direction.
    const double angle = 0.618033988749895 * (i * 31 + j);
    delta = Eigen::RowVector2d(std::cos(angle), std::sin(angle)) * 1e-9;
    d = 1e-9;
  }
  const Eigen::RowVector2d f = delta / d * (k2 / d);
  disp.row(i) += f;
  disp.row(j) -= f;
}

}  // namespace

NodePositions spring_layout(const SliceGraph& g, std::uint64_t seed, const SpringOptions& opts) {
  const int n = g.vertex_count();
  NodePositions pos(n, 2);
  if (n == 0) return pos;
  if (n == 1) {
    pos.row(0) << 0.5, 0.5;
    return pos;
  }
  detail::Rng rng(seed);
  for (int v = 0; v < n; ++v) pos.row(v) << detail::uniform01(rng), detail::uniform01(rng);

  const double k = std::sqrt(1.0 / n);
  const double k2 = k * k;
  NodePositions disp(n, 2);
  for (int it = 0; it < opts.iterations; ++it) {
    const double temperature =
        opts.initial_temperature * (1.0 - static_cast<double>(it) / opts.iterations);
    disp.setZero();

    if (n <= kExactRepulsionLimit) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add_repulsion(pos, i, j, k2, disp);
    } else {
      // Grid variant: repulsion only within 2k.
      const double cell = 2.0 * k;
      std::map<std::pair<long, long>, std::vector<int>> buckets;
      for (int v = 0; v < n; ++v)
        buckets[{std::lround(std::floor(pos(v, 0) / cell)), std::lround(std::floor(pos(v, 1) / cell))}]
            .push_back(v);
      for (const auto& [key, members] : buckets) {
        for (long dx = -1; dx <= 1; ++dx) {
          for (long dy = -1; dy <= 1; ++dy) {
            auto other = buckets.find({key.first + dx, key.second + dy});
            if (other == buckets.end()) continue;
            for (int i : members)
              for (int j : other->second)
                if (i < j && (pos.row(i) - pos.row(j)).norm() < cell) add_repulsion(pos, i, j, k2, disp);
          }
        }
      }
    }

    for (int v = 0; v < n; ++v) {
      for (int u : g.neighbors(v)) {
        if (u < v) continue;
        const Eigen::RowVector2d delta = pos.row(v) - pos.row(u);
        const double d = delta.norm();
        if (d < 1e-12) continue;
        const Eigen::RowVector2d f = delta / d * (d * d / k);
        disp.row(v) -= f;
        disp.row(u) += f;
      }
    }

    for (int v = 0; v < n; ++v) {
      const double len = disp.row(v).norm();
      if (len > 0) pos.row(v) += disp.row(v) / len * std::min(len, temperature);
    }
  }
  normalize_unit_square(pos);
  return pos;
}

// ---------------------------------------------------------------------------
// Supernodes

SuperGraph summarize_supernodes(const Community& c, const TemporalNetwork& net, int node_threshold,
                                std::uint64_t seed) {
  if (c.size() <= node_threshold)
    throw Error(ErrorKind::kBelowThreshold, "community has " + std::to_string(c.size()) +
                                                " nodes, summary needs more than " +
                                                std::to_string(node_threshold));
  const SliceGraph g = SliceGraph::from_members(c.members, c.intra_edges);
  const Partition part = detect_subcommunities(c, seed);
  const int groups = part.empty() ? 0 : *std::max_element(part.begin(), part.end()) + 1;

  SuperGraph out;
  out.supernodes.resize(groups);
  for (int s = 0; s < groups; ++s) out.supernodes[s].id = s;
  for (int v = 0; v < g.vertex_count(); ++v) out.supernodes[part[v]].members.push_back(g.node(v));

  for (auto& sn : out.supernodes) {
    std::map<std::string, int> votes;
    for (NodeId v : sn.members)
      if (const auto& l = net.label(v)) ++votes[*l];
    int best = 0;
    for (const auto& [label, count] : votes) {
      if (count > best) {  // map order makes ties resolve to the smallest label
        best = count;
        sn.label = label;
      }
    }
  }

  std::map<std::pair<int, int>, int> weights;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : g.neighbors(v))
      if (u > v && part[u] != part[v])
        ++weights[{std::min(part[u], part[v]), std::max(part[u], part[v])}];
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [ab, w] : weights) {
    out.superedges.push_back({ab.first, ab.second, w});
    pairs.push_back(ab);
  }
  out.positions = spring_layout(SliceGraph::from_local_edges(groups, pairs), seed);
  return out;
}

// ---------------------------------------------------------------------------
// Temporal activity map

TamView tam_rows(const Community& c, const Timeslice& slice, const TemporalNetwork& net) {
  TamView out;
  out.t_start = slice.t_start;
  out.edge_series.assign(static_cast<std::size_t>(slice.length()), 0);

  std::unordered_map<NodeId, std::size_t> row_index;
  out.rows.reserve(c.members.size());
  for (NodeId v : c.members) {
    row_index.emplace(v, out.rows.size());
    out.rows.push_back({v, {}});
  }
  for (const auto& e : c.intra_edges) {
    ++out.edge_series.at(static_cast<std::size_t>(e.timestamp - slice.t_start));
    out.rows[row_index.at(e.source)].active.push_back(e.timestamp);
    out.rows[row_index.at(e.target)].active.push_back(e.timestamp);
  }
  for (auto& r : out.rows) {
    std::sort(r.active.begin(), r.active.end());
    r.active.erase(std::unique(r.active.begin(), r.active.end()), r.active.end());
  }
  std::sort(out.rows.begin(), out.rows.end(), [&](const TamRow& a, const TamRow& b) {
    const auto& la = net.label(a.node);
    const auto& lb = net.label(b.node);
    if (la.has_value() != lb.has_value()) return la.has_value();
    if (la && *la != *lb) return *la < *lb;
    const Timestamp fa = a.active.empty() ? std::numeric_limits<Timestamp>::max() : a.active.front();
    const Timestamp fb = b.active.empty() ? std::numeric_limits<Timestamp>::max() : b.active.front();
    if (fa != fb) return fa < fb;
    return a.node < b.node;
  });
  return out;
}

}  // namespace tempocom
