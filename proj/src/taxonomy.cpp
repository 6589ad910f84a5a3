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

#include "tempocom/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "tempocom/error.hpp"

namespace tempocom {
namespace {

constexpr double kEps = 1e-12;

bool in_unit(double v) { return v > 0.0 && v <= 1.0; }

double median(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

void validate(const StructuralParams& p) {
  if (!in_unit(p.clique_density_min) || !in_unit(p.star_hub_min) ||
      !in_unit(p.circular_degree2_min))
    throw Error(ErrorKind::kInvalidConfig, "structural fractions must be in (0, 1]");
  if (p.tree_slack < 0 || p.star_leaf_median_max < 0)
    throw Error(ErrorKind::kInvalidConfig, "structural counts must be >= 0");
}

void validate(const TemporalParams& p) {
  if (!(p.dispersion_alpha > 0.0))
    throw Error(ErrorKind::kInvalidConfig, "dispersion alpha must be > 0");
}

StructuralCategory classify_structural(const SliceGraph& g, const StructuralParams& p) {
  const int n = g.vertex_count();
  const auto m = static_cast<double>(g.edge_count());
  if (n < 2 || m == 0) return StructuralCategory::kLowConnectivity;

  const double density = 2.0 * m / (static_cast<double>(n) * (n - 1));
  if (density + kEps >= p.clique_density_min) return StructuralCategory::kClique;

  std::vector<int> degrees(n);
  int degree2 = 0;
  for (int v = 0; v < n; ++v) {
    degrees[v] = g.degree(v);
    degree2 += degrees[v] == 2;
  }
  const bool connected = g.connected();

  if (connected && static_cast<double>(degree2) / n + kEps >= p.circular_degree2_min &&
      m <= n + p.tree_slack)
    return StructuralCategory::kCircular;

  const int hub = *std::max_element(degrees.begin(), degrees.end());
  if (static_cast<double>(hub) / (n - 1) + kEps >= p.star_hub_min &&
      median(degrees) <= p.star_leaf_median_max)
    return StructuralCategory::kStar;

  if (connected && m <= n - 1 + p.tree_slack) return StructuralCategory::kTree;
  return StructuralCategory::kLowConnectivity;
}

StructuralCategory classify_structural(const Community& c, const StructuralParams& p) {
  return classify_structural(SliceGraph::from_members(c.members, c.intra_edges), p);
}

TemporalStats temporal_stats(std::span<const TemporalEdge> intra_edges, const Timeslice& slice) {
  TemporalStats s;
  s.slice_length = slice.length();
  s.sigma_uniform = static_cast<double>(s.slice_length) / std::sqrt(12.0);
  if (intra_edges.empty()) return s;

  std::vector<Timestamp> active;
  double mean = 0.0;
  for (const auto& e : intra_edges) {
    active.push_back(e.timestamp);
    mean += static_cast<double>(e.timestamp);
  }
  std::sort(active.begin(), active.end());
  s.active = std::unique(active.begin(), active.end()) - active.begin();

  const auto count = static_cast<double>(intra_edges.size());
  mean /= count;
  double var = 0.0;
  for (const auto& e : intra_edges) {
    const double d = static_cast<double>(e.timestamp) - mean;
    var += d * d;
  }
  s.sigma = std::sqrt(var / count);
  s.ratio = s.sigma / s.sigma_uniform;
  return s;
}

TemporalCategory classify_temporal(const Community& c, const Timeslice& slice,
                                   const TemporalParams& p) {
  const TemporalStats s = temporal_stats(c.intra_edges, slice);
  TemporalCategory out;
  out.frequency = s.active == s.slice_length ? Frequency::kContinuous : Frequency::kSporadic;
  out.dispersion = s.ratio <= p.dispersion_alpha + kEps ? Dispersion::kGrouped : Dispersion::kDispersed;
  return out;
}

std::vector<EventSet> classify_evolution(std::span<const Community> communities,
                                         std::span<const EvolutionLink> links) {
  const auto n = communities.size();
  auto index_of = [&](CommunityKey k) {
    auto it = std::lower_bound(communities.begin(), communities.end(), k,
                               [](const Community& c, CommunityKey key) { return c.key < key; });
    if (it == communities.end() || it->key != k)
      throw Error(ErrorKind::kNotFound, "link refers to an unknown community");
    return static_cast<std::size_t>(it - communities.begin());
  };

  std::vector<EventSet> out(n);
  std::vector<int> incoming(n), outgoing(n), split_branches(n), merge_branches(n);
  for (const auto& l : links) {
    const auto from = index_of(l.from);
    const auto to = index_of(l.to);
    ++outgoing[from];
    ++incoming[to];
    switch (l.change) {
      case SizeChange::kGrow: out[from].insert(EvolutionEvent::kGrow); break;
      case SizeChange::kContract: out[from].insert(EvolutionEvent::kContract); break;
      case SizeChange::kPreserve: out[from].insert(EvolutionEvent::kPreserve); break;
    }
    split_branches[from] += l.split_branch;
    merge_branches[to] += l.merge_branch;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (incoming[i] == 0) out[i].insert(EvolutionEvent::kBirth);
    if (outgoing[i] == 0) out[i].insert(EvolutionEvent::kDeath);
    if (split_branches[i] == 2) out[i].insert(EvolutionEvent::kSplit);
    if (merge_branches[i] == 2) out[i].insert(EvolutionEvent::kMerge);
  }
  return out;
}

std::string_view to_string(Taxonomy t) {
  switch (t) {
    case Taxonomy::kStructural: return "Structural";
    case Taxonomy::kTemporal: return "Temporal";
    case Taxonomy::kEvolution: return "Evolution";
  }
  return "";
}

std::optional<Taxonomy> parse_taxonomy(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "structural") return Taxonomy::kStructural;
  if (lower == "temporal") return Taxonomy::kTemporal;
  if (lower == "evolution") return Taxonomy::kEvolution;
  return std::nullopt;
}

std::vector<std::string> category_labels(Taxonomy t) {
  std::vector<std::string> out;
  switch (t) {
    case Taxonomy::kStructural:
      for (auto c : kStructuralCategories) out.emplace_back(to_string(c));
      break;
    case Taxonomy::kTemporal:
      for (auto c : kTemporalCategories) out.emplace_back(to_string(c));
      break;
    case Taxonomy::kEvolution:
      for (auto e : kEvolutionEvents) out.emplace_back(to_string(e));
      break;
  }
  return out;
}

std::vector<int> category_indices(const Community& c, Taxonomy t) {
  switch (t) {
    case Taxonomy::kStructural: {
      auto it = std::find(kStructuralCategories.begin(), kStructuralCategories.end(), c.structural);
      return {static_cast<int>(it - kStructuralCategories.begin())};
    }
    case Taxonomy::kTemporal:
      return {temporal_index(c.temporal)};
    case Taxonomy::kEvolution: {
      std::vector<int> out;
      for (std::size_t i = 0; i < kEvolutionEvents.size(); ++i)
        if (c.events.contains(kEvolutionEvents[i])) out.push_back(static_cast<int>(i));
      return out;
    }
  }
  return {};
}

TaxonomyMatrix taxonomy_matrix(std::span<const Community> communities, Taxonomy x, Taxonomy y) {
  TaxonomyMatrix m;
  m.x = x;
  m.y = y;
  m.x_labels = category_labels(x);
  m.y_labels = category_labels(y);
  m.counts = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(m.y_labels.size()),
                                   static_cast<Eigen::Index>(m.x_labels.size()));
  for (const auto& c : communities) {
    const auto xs = category_indices(c, x);
    const auto ys = category_indices(c, y);
    for (int i : ys)
      for (int j : xs) ++m.counts(i, j);
  }
  return m;
}

}  // namespace tempocom
