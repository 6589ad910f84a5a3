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

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "acceptance.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "tempocom/analysis.hpp"
#include "tempocom/community.hpp"
#include "tempocom/metrics.hpp"
#include "tempocom/taxonomy.hpp"

namespace tempocom::acceptance {

using namespace tempocom::testing;

namespace {

Edges perfect_matching(int n) {
  Edges e;
  for (int i = 0; i + 1 < n; i += 2) e.emplace_back(i, i + 1);
  return e;
}

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

Community stamped(const std::vector<Timestamp>& stamps) {
  // One star edge per stamp so repeated timestamps stay distinct edges.
  Community c;
  for (std::size_t i = 0; i < stamps.size(); ++i)
    c.intra_edges.push_back({0, static_cast<NodeId>(i + 1), stamps[i]});
  return c;
}

Timeslice slice_of(Timestamp t_start, Timestamp t_end) {
  Timeslice s;
  s.t_start = t_start;
  s.t_end = t_end;
  return s;
}

std::string events_text(const std::set<EvolutionEvent>& events) {
  std::string out;
  for (auto e : events) out += (out.empty() ? "" : ",") + std::string(to_string(e));
  return "{" + out + "}";
}

std::set<EvolutionEvent> as_set(const EventSet& s) {
  const auto v = s.to_vector();
  return {v.begin(), v.end()};
}

}  // namespace

void structural_classifier(Report& r) {
  struct Case {
    std::string name;
    int n;
    Edges edges;
    StructuralCategory want;
  };
  std::vector<Case> cases;
  for (int n : {6, 8, 10, 12, 16}) {
    const auto tag = std::to_string(n);
    cases.push_back({"binary tree " + tag, n, binary_tree(n), StructuralCategory::kTree});
    cases.push_back({"star " + tag, n, star(n), StructuralCategory::kStar});
    cases.push_back({"cycle " + tag, n, cycle(n), StructuralCategory::kCircular});
    cases.push_back({"clique " + tag, n, complete(n), StructuralCategory::kClique});
    cases.push_back({"matching " + tag, n, perfect_matching(n), StructuralCategory::kLowConnectivity});
  }
  using SC = StructuralCategory;
  cases.push_back({"K6 minus an edge", 6, without_edge(complete(6), 0, 1), SC::kClique});
  cases.push_back({"K5 minus an edge", 5, without_edge(complete(5), 0, 1), SC::kClique});
  cases.push_back({"K4 minus an edge", 4, without_edge(complete(4), 0, 1), SC::kLowConnectivity});
  cases.push_back({"C8 plus a chord", 8, with_edge(cycle(8), 0, 4), SC::kLowConnectivity});
  cases.push_back({"P10", 10, path(10), SC::kTree});
  cases.push_back({"P20", 20, path(20), SC::kCircular});
  cases.push_back({"K1,7 plus a leaf-leaf edge", 8, with_edge(star(8), 1, 2), SC::kStar});
  cases.push_back({"K1,7 minus a spoke", 8, without_edge(star(8), 0, 7), SC::kStar});
  cases.push_back({"binary tree 7 plus a leaf-leaf edge", 7, with_edge(binary_tree(7), 3, 4),
                   SC::kLowConnectivity});
  cases.push_back({"binary tree 7 minus an edge", 7, without_edge(binary_tree(7), 2, 6),
                   SC::kLowConnectivity});

  std::vector<SliceGraph> graphs;
  for (const auto& c : cases) graphs.push_back(graph(c.n, c.edges));
  Stopwatch clock;
  std::vector<StructuralCategory> got;
  for (const auto& g : graphs) got.push_back(classify_structural(g));
  const double elapsed = clock.seconds();

  int correct = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const bool ok = got[i] == cases[i].want;
    correct += ok;
    r.expect(ok, cases[i].name + ": got " + std::string(to_string(got[i])) + ", want " +
                     std::string(to_string(cases[i].want)));
  }
  r.expect(elapsed < 1.0, format("classification took %.3fs", elapsed));
  r.summary(format("%d/%zu correct in %.4fs", correct, cases.size(), elapsed));
}

void temporal_classifier(Report& r) {
  const Timeslice slice = slice_of(0, 99);
  struct Case {
    std::vector<Timestamp> stamps;
    Frequency frequency;
    Dispersion dispersion;
  };
  std::vector<Case> cases;
  for (int i = 0; i < 5; ++i) {
    // Every timestamp once plus a heavy burst near the middle.
    std::vector<Timestamp> cg;
    for (Timestamp t = 0; t < 100; ++t) cg.push_back(t);
    for (int k = 0; k < 400 + 50 * i; ++k) cg.push_back(45 + i);
    cases.push_back({cg, Frequency::kContinuous, Dispersion::kGrouped});

    std::vector<Timestamp> cd;
    for (Timestamp t = 0; t < 100; ++t)
      for (int k = 0; k <= (t * (i + 1)) % 3; ++k) cd.push_back(t);
    cases.push_back({cd, Frequency::kContinuous, Dispersion::kDispersed});

    std::vector<Timestamp> sg;
    for (Timestamp t = 20 + 10 * i; t < 25 + 10 * i + i; ++t)
      for (int k = 0; k < 3; ++k) sg.push_back(t);
    cases.push_back({sg, Frequency::kSporadic, Dispersion::kGrouped});

    std::vector<Timestamp> sd;
    for (Timestamp t = i; t < 100; t += 7 + i) sd.push_back(t);
    sd.push_back(99);
    cases.push_back({sd, Frequency::kSporadic, Dispersion::kDispersed});
  }

  int agree = 0;
  std::set<std::pair<Frequency, Dispersion>> quadrants;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    const auto got = temporal_stats(stamped(c.stamps).intra_edges, slice);
    const auto want = temporal_direct(c.stamps, slice.t_start, slice.t_end);
    const auto cat = classify_temporal(stamped(c.stamps), slice);
    const bool ok = got.active == want.active && std::abs(got.ratio - want.ratio) <= 1e-12 &&
                    (cat.frequency == Frequency::kContinuous) == want.continuous &&
                    (cat.dispersion == Dispersion::kGrouped) == want.grouped;
    agree += ok;
    r.expect(ok, format("community %zu: library (%lld, %.12f) vs direct (%lld, %.12f)", i,
                        static_cast<long long>(got.active), got.ratio, want.active, want.ratio));
    r.expect(cat.frequency == c.frequency && cat.dispersion == c.dispersion,
             format("community %zu landed in %s", i, std::string(to_string(cat)).c_str()));
    quadrants.emplace(cat.frequency, cat.dispersion);
  }
  r.expect(quadrants.size() == 4, "not all four quadrants covered");

  // Worked examples on the slice [10, 19].
  const Timeslice ten = slice_of(10, 19);
  std::vector<Timestamp> every;
  for (Timestamp t = 10; t <= 19; ++t) every.push_back(t);
  std::vector<Timestamp> burst;
  for (Timestamp t : {12, 13, 14})
    for (int k = 0; k < 5; ++k) burst.push_back(t);
  const std::vector<Timestamp> spread = {10, 15, 19};

  const auto uniform = temporal_stats(stamped(every).intra_edges, ten);
  r.expect(round3(uniform.ratio) == 0.995, format("uniform ratio %.6f", uniform.ratio));
  r.expect(classify_temporal(stamped(every), ten) ==
               TemporalCategory{Frequency::kContinuous, Dispersion::kDispersed},
           "uniform example is not Continuous/Dispersed");

  const auto b = temporal_stats(stamped(burst).intra_edges, ten);
  r.expect(round3(b.sigma) == 0.816, format("burst sigma %.6f", b.sigma));
  r.expect(round3(b.sigma_uniform) == 2.887, format("burst sigma_u %.6f", b.sigma_uniform));
  r.expect(round3(b.ratio) == 0.283, format("burst ratio %.6f", b.ratio));
  r.expect(classify_temporal(stamped(burst), ten) ==
               TemporalCategory{Frequency::kSporadic, Dispersion::kGrouped},
           "burst example is not Sporadic/Grouped");

  const auto s = temporal_stats(stamped(spread).intra_edges, ten);
  r.expect(round3(s.sigma) == 3.682, format("spread sigma %.6f", s.sigma));
  r.expect(s.ratio > 1.0, format("spread ratio %.6f", s.ratio));
  r.expect(classify_temporal(stamped(spread), ten) ==
               TemporalCategory{Frequency::kSporadic, Dispersion::kDispersed},
           "spread example is not Sporadic/Dispersed");

  r.summary(format("%d/%zu communities agree, worked examples %s", agree, cases.size(),
                   r.failed() ? "checked" : "reproduce"));
}

void evolution_classifier(Report& r) {
  auto range = [](int lo, int hi) {
    std::set<int> s;
    for (int i = lo; i <= hi; ++i) s.insert(i);
    return s;
  };
  auto join = [](std::set<int> a, const std::set<int>& b) {
    a.insert(b.begin(), b.end());
    return a;
  };
  const MemberSets slices = {
      {range(1, 5), range(10, 15), range(20, 22)},                  // A, B, C
      {range(1, 5), range(10, 12), range(13, 16)},                  // A2, B1, B2
      {join(range(1, 5), range(10, 12)), range(13, 18), range(30, 32)},  // M, G, N
      {join(range(1, 5), {10}), range(30, 32)},                     // M', N'
  };
  using E = EvolutionEvent;
  const std::vector<std::vector<std::set<E>>> table = {
      {{E::kBirth, E::kPreserve}, {E::kBirth, E::kSplit, E::kContract}, {E::kBirth, E::kDeath}},
      {{E::kGrow}, {E::kGrow}, {E::kGrow}},
      {{E::kMerge, E::kContract}, {E::kDeath}, {E::kBirth, E::kPreserve}},
      {{E::kDeath}, {E::kDeath}},
  };
  const std::vector<std::vector<std::string>> names = {
      {"A", "B", "C"}, {"A2", "B1", "B2"}, {"M", "G", "N"}, {"M'", "N'"}};

  const auto oracle = evolution_direct(slices);
  r.expect(oracle == table, "rule-derived oracle disagrees with the hand table");

  // Library on the same member sets.
  std::vector<std::vector<Community>> per_slice(slices.size());
  for (std::size_t s = 0; s < slices.size(); ++s)
    for (std::size_t l = 0; l < slices[s].size(); ++l)
      per_slice[s].push_back(members_only({static_cast<int>(s + 1), static_cast<int>(l)},
                                          {slices[s][l].begin(), slices[s][l].end()}));
  std::vector<Community> all;
  std::vector<EvolutionLink> links;
  for (std::size_t s = 0; s < per_slice.size(); ++s) {
    if (s > 0) {
      const auto lr = link_communities(per_slice[s - 1], per_slice[s], 0.5);
      links.insert(links.end(), lr.links.begin(), lr.links.end());
    }
    all.insert(all.end(), per_slice[s].begin(), per_slice[s].end());
  }
  const auto events = classify_evolution(all, links);
  std::set<E> seen;
  std::size_t k = 0;
  for (std::size_t s = 0; s < slices.size(); ++s)
    for (std::size_t l = 0; l < slices[s].size(); ++l, ++k) {
      const auto got = as_set(events[k]);
      seen.insert(got.begin(), got.end());
      r.expect(got == table[s][l], names[s][l] + ": got " + events_text(got) + ", want " +
                                       events_text(table[s][l]));
    }
  r.expect(seen.size() == 7, "fixture does not exercise all seven events");

  // End to end: each member set becomes a clique active inside its slice.
  std::vector<std::tuple<int, int, Timestamp>> edges;
  for (std::size_t s = 0; s < slices.size(); ++s)
    for (const auto& members : slices[s]) {
      const std::vector<int> v(members.begin(), members.end());
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
          edges.emplace_back(v[i], v[j], static_cast<Timestamp>(10 * s + 1 + (i + j) % 5));
    }
  AnalysisConfig cfg;
  cfg.slice_count = 4;
  const auto result = run_analysis(network_of(edges), cfg);
  std::map<std::pair<int, std::vector<int>>, std::set<E>> by_members;
  for (const auto& c : result.communities) {
    std::vector<int> m;
    for (NodeId v : c.members) m.push_back(std::stoi(result.network->node_name(v).substr(1)));
    by_members[{c.key.slice - 1, m}] = as_set(c.events);
  }
  r.expect(result.communities.size() == 11,
           format("pipeline found %zu communities, want 11", result.communities.size()));
  for (std::size_t s = 0; s < slices.size(); ++s)
    for (std::size_t l = 0; l < slices[s].size(); ++l) {
      const std::vector<int> m(slices[s][l].begin(), slices[s][l].end());
      auto it = by_members.find({static_cast<int>(s), m});
      if (!r.expect(it != by_members.end(), "pipeline did not recover " + names[s][l])) continue;
      r.expect(it->second == table[s][l], "pipeline " + names[s][l] + ": got " +
                                              events_text(it->second));
    }
  r.summary("11 communities match oracle and hand table, library and pipeline");
}

void modularity_louvain(Report& r) {
  const Edges triangles = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  const double q = modularity({0, 0, 0, 1, 1, 1}, graph(6, triangles));
  r.expect(std::abs(q - 0.5) <= 1e-9, format("Q(two triangles) = %.12f", q));
  r.expect(std::abs(modularity_direct(6, triangles, {0, 0, 0, 1, 1, 1}) - 0.5) <= 1e-12,
           "direct modularity oracle disagrees on two triangles");

  int recovered = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto f = planted_two_cliques(seed);
    const auto best = best_partition(f.n, f.edges);
    const auto planted = normalize(f.planted);
    const auto found = louvain(graph(f.n, f.edges), seed);
    const bool oracle_ok = normalize(best.labels) == planted && best.optima == 1;
    const bool louvain_ok = normalize(found.partition) == planted &&
                            std::abs(found.modularity - best.q) <= 1e-9;
    r.expect(oracle_ok, format("seed %llu: brute-force optimum is not the planted split",
                               static_cast<unsigned long long>(seed)));
    r.expect(louvain_ok, format("seed %llu: Louvain Q %.9f vs optimum %.9f",
                                static_cast<unsigned long long>(seed), found.modularity, best.q));
    recovered += louvain_ok;
  }
  r.summary(format("Q = %.9f, planted partitions recovered %d/20", q, recovered));
}

void betweenness_approximation(Report& r) {
  double worst = 1.0, total = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int n = 50;
    const auto e = gnp(n, 0.1, seed);
    const int pivots = static_cast<int>(std::ceil(kPivotFraction * n));
    const auto approx = approximate_betweenness(graph(n, e), pivots, seed);
    const double rho = spearman(approx, exact_betweenness(n, e));
    worst = std::min(worst, rho);
    r.note(format("G(50, 0.1) seed %2llu, %d pivots: spearman %.4f",
                  static_cast<unsigned long long>(seed), pivots, rho));
    total += rho;
  }
  const double mean = total / 10.0;
  r.expect(mean >= 0.9, format("mean spearman %.4f < 0.9 over 10 seeds", mean));

  double max_error = 0.0;
  int graphs = 0;
  for (int n = 3; n <= 12; ++n)
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto e = gnp(n, 0.4, seed * 31 + n);
      const auto exact = exact_betweenness(n, e);
      const auto full = approximate_betweenness(graph(n, e), n, seed);
      for (int v = 0; v < n; ++v) max_error = std::max(max_error, std::abs(full[v] - exact[v]));
      ++graphs;
    }
  r.expect(max_error <= 1e-9, format("pivots = n differs from exact by %.3g", max_error));
  r.summary(format("mean spearman %.4f (min %.4f) over 10 seeds; max error %.2g on %d graphs "
                   "at pivots = n",
                   mean, worst, max_error, graphs));
}

}  // namespace tempocom::acceptance
