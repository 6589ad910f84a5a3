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

#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <tuple>

namespace tempocom::testing {
namespace {

std::pair<int, int> ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::string padded(int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "n%02d", i);
  return buf;
}

}  // namespace

Edges complete(int n) {
  Edges e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return e;
}

Edges cycle(int n) {
  Edges e = path(n);
  e.emplace_back(0, n - 1);
  return e;
}

Edges path(int n) {
  Edges e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

Edges star(int n) {
  Edges e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return e;
}

Edges binary_tree(int n) {
  Edges e;
  for (int i = 1; i < n; ++i) e.emplace_back((i - 1) / 2, i);
  return e;
}

Edges ladder(int n) {
  const int half = n / 2;
  Edges e;
  for (int i = 0; i < half; ++i) {
    e.emplace_back(i, i + half);
    if (i + 1 < half) {
      e.emplace_back(i, i + 1);
      e.emplace_back(i + half, i + half + 1);
    }
  }
  return e;
}

Edges gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Edges e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (u(rng) < p) e.emplace_back(i, j);
  return e;
}

Edges with_edge(Edges e, int a, int b) {
  e.push_back(ordered(a, b));
  return e;
}

Edges without_edge(Edges e, int a, int b) {
  const auto key = ordered(a, b);
  std::erase_if(e, [&](const auto& x) { return ordered(x.first, x.second) == key; });
  return e;
}

SliceGraph graph(int n, const Edges& e) { return SliceGraph::from_local_edges(n, e); }

Community community_of(int n, const Edges& e, Timestamp t, CommunityKey key) {
  Community c;
  c.key = key;
  c.members.resize(n);
  std::iota(c.members.begin(), c.members.end(), NodeId{0});
  for (auto [a, b] : e) {
    auto [lo, hi] = ordered(a, b);
    c.intra_edges.push_back({static_cast<NodeId>(lo), static_cast<NodeId>(hi), t});
  }
  std::sort(c.intra_edges.begin(), c.intra_edges.end(), edge_less);
  return c;
}

Community members_only(CommunityKey key, std::vector<NodeId> members) {
  Community c;
  c.key = key;
  std::sort(members.begin(), members.end());
  c.members = std::move(members);
  return c;
}

TemporalNetwork network_of(const std::vector<std::tuple<int, int, Timestamp>>& edges,
                           const Metadata& metadata) {
  std::vector<EdgeRecord> records;
  for (auto [a, b, t] : edges) records.push_back({padded(a), padded(b), t});
  return build_network(records, metadata);
}

PlantedFixture planted_two_cliques(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int a = 3 + static_cast<int>(rng() % 3);                    // 3..5
  const int b = 3 + static_cast<int>(rng() % (std::min(5, 10 - a) - 2));  // 3..min(5, 10-a)
  PlantedFixture f;
  f.n = a + b;
  std::vector<int> perm(f.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  f.planted.assign(f.n, 0);
  for (int i = 0; i < a; ++i)
    for (int j = i + 1; j < a; ++j) f.edges.push_back(ordered(perm[i], perm[j]));
  for (int i = a; i < f.n; ++i) {
    f.planted[perm[i]] = 1;
    for (int j = i + 1; j < f.n; ++j) f.edges.push_back(ordered(perm[i], perm[j]));
  }
  const int u = perm[rng() % a];
  const int v = perm[a + rng() % b];
  f.edges.push_back(ordered(u, v));
  return f;
}

ContactNetwork school_contacts(const ContactSpec& s) {
  std::mt19937_64 rng(s.seed);
  ContactNetwork out;
  std::vector<std::vector<std::string>> groups(s.classes);
  for (int c = 0; c < s.classes; ++c) {
    const std::string label = std::to_string(c / 2 + 1) + static_cast<char>('A' + c % 2);
    for (int k = 0; k < s.per_class; ++k) {
      groups[c].push_back(label + "_" + std::to_string(k));
      out.labels[groups[c].back()] = label;
    }
  }
  for (int t = 0; t < s.teachers; ++t) {
    const std::string name = "teacher_" + std::to_string(t);
    groups[t % s.classes].push_back(name);
    out.labels[name] = "Teachers";
  }

  std::poisson_distribution<int> intra(s.intra_rate), inter(s.inter_rate), lunch(s.lunch_rate);
  std::set<std::tuple<std::string, std::string, Timestamp>> seen;
  auto emit = [&](const std::string& x, const std::string& y, Timestamp t) {
    if (x == y) return;
    auto key = x < y ? std::tuple(x, y, t) : std::tuple(y, x, t);
    if (seen.insert(key).second) out.edges.push_back({x, y, t});
  };
  auto pick = [&](const std::vector<std::string>& g) { return g[rng() % g.size()]; };

  const Timestamp lunch_start = s.steps_per_day * 2 / 5;
  const Timestamp lunch_end = lunch_start + s.steps_per_day / 10;
  for (Timestamp day = 0; day < s.days; ++day) {
    for (Timestamp step = 0; step < s.steps_per_day; ++step) {
      const Timestamp t = day * (s.steps_per_day + s.night) + step;
      const bool at_lunch = step >= lunch_start && step < lunch_end;
      // Each step has at least one contact, as in a dense proximity record.
      const int within = std::max(1, intra(rng));
      for (int i = 0; i < within; ++i) {
        const auto& g = groups[rng() % groups.size()];
        emit(pick(g), pick(g), t);
      }
      const int across = at_lunch ? lunch(rng) : inter(rng);
      for (int i = 0; i < across; ++i) {
        // Lunch mixes neighbouring classes; otherwise same-grade pairs mix.
        const auto c = rng() % groups.size();
        const auto d = at_lunch ? (c + 1 + rng() % 3) % groups.size() : c ^ 1u;
        emit(pick(groups[c]), pick(groups[d % groups.size()]), t);
      }
    }
  }
  return out;
}

std::vector<EdgeRecord> bursty_stream(int nodes, int edges, Timestamp span, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::tuple<int, int, Timestamp>> seen;
  std::vector<EdgeRecord> out;
  out.reserve(edges);
  // Skewed popularity: a few accounts attract many interactions.
  std::vector<double> weight(nodes);
  for (int i = 0; i < nodes; ++i) weight[i] = 1.0 / std::pow(i + 1.0, 0.6);
  std::discrete_distribution<int> popular(weight.begin(), weight.end());
  std::uniform_int_distribution<int> anyone(0, nodes - 1);
  std::uniform_int_distribution<Timestamp> when(0, span - 1);
  std::uniform_int_distribution<int> cluster_size(3, 8), burst_len(1, 12);
  auto emit = [&](int a, int b, Timestamp t) {
    if (a == b || static_cast<int>(out.size()) >= edges) return;
    if (!seen.emplace(std::min(a, b), std::max(a, b), t).second) return;
    out.push_back({"u" + std::to_string(a), "u" + std::to_string(b), t});
  };
  while (static_cast<int>(out.size()) < edges) {
    const Timestamp start = when(rng);
    const Timestamp len = burst_len(rng);
    if (rng() % 4 == 0) {
      // Broadcast: one popular account and its repliers.
      const int hub = popular(rng);
      const int fans = cluster_size(rng) * 2;
      for (int i = 0; i < fans; ++i)
        emit(hub, anyone(rng), std::min(span - 1, start + static_cast<Timestamp>(rng() % len)));
    } else {
      std::vector<int> group(cluster_size(rng));
      for (auto& v : group) v = anyone(rng);
      const int contacts = static_cast<int>(group.size()) * 2;
      for (int i = 0; i < contacts; ++i)
        emit(group[rng() % group.size()], group[rng() % group.size()],
             std::min(span - 1, start + static_cast<Timestamp>(rng() % len)));
    }
  }
  return out;
}

}  // namespace tempocom::testing
