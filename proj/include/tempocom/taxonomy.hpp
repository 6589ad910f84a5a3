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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "tempocom/community.hpp"
#include "tempocom/slicing.hpp"
#include "tempocom/types.hpp"

namespace tempocom {

/// Tolerances that let near-prototypes match a structural class.
struct StructuralParams {
  double clique_density_min = 0.9;
  double star_hub_min = 0.8;
  double star_leaf_median_max = 1.0;
  double circular_degree2_min = 0.9;
  int tree_slack = 0;
};

struct TemporalParams {
  double dispersion_alpha = 0.5;
};

/// Throws Error(kInvalidConfig) on out-of-range values.
void validate(const StructuralParams& p);
void validate(const TemporalParams& p);

/// First match in the order Clique, Circular, Star, Tree, LowConnectivity.
StructuralCategory classify_structural(const SliceGraph& g, const StructuralParams& p = {});
StructuralCategory classify_structural(const Community& c, const StructuralParams& p = {});

/// Raw quantities behind the temporal class.
struct TemporalStats {
  Timestamp slice_length = 0;  ///< S
  Timestamp active = 0;        ///< A, slice timestamps with an intra-edge
  double sigma = 0.0;          ///< population std-dev of intra-edge timestamps
  double sigma_uniform = 0.0;  ///< S / sqrt(12)
  double ratio = 0.0;          ///< sigma / sigma_uniform
};

TemporalStats temporal_stats(std::span<const TemporalEdge> intra_edges, const Timeslice& slice);

/// Continuous iff every slice timestamp is active; Grouped iff the spread of
/// edge timestamps is at most alpha times that of a uniform spread.
TemporalCategory classify_temporal(const Community& c, const Timeslice& slice,
                                   const TemporalParams& p = {});

/// Event sets for every community, given links between all adjacent slices.
/// `communities` must be sorted by key; the result is parallel to it.
std::vector<EventSet> classify_evolution(std::span<const Community> communities,
                                         std::span<const EvolutionLink> links);

enum class Taxonomy { kStructural, kTemporal, kEvolution };

std::string_view to_string(Taxonomy t);
std::optional<Taxonomy> parse_taxonomy(std::string_view s);

/// Category labels of one taxonomy in serialization order.
std::vector<std::string> category_labels(Taxonomy t);

/// Category indices a community contributes to under `t`.
std::vector<int> category_indices(const Community& c, Taxonomy t);

struct TaxonomyMatrix {
  Taxonomy x = Taxonomy::kStructural;
  Taxonomy y = Taxonomy::kStructural;
  std::vector<std::string> x_labels;
  std::vector<std::string> y_labels;
  /// counts(i, j): communities with y-category i and x-category j.
  Eigen::MatrixXi counts;
};

/// Each community adds one to every (y-category, x-category) pair it belongs
/// to. Single-valued taxonomies therefore fill only the diagonal when x == y;
/// an Evolution x Evolution matrix also counts co-occurring events.
TaxonomyMatrix taxonomy_matrix(std::span<const Community> communities, Taxonomy x, Taxonomy y);

}  // namespace tempocom
