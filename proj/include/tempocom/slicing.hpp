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

#include <optional>
#include <span>
#include <vector>

#include "tempocom/network.hpp"

namespace tempocom {

/// Contiguous timestamp interval plus a view of the edges inside it. The edge
/// span points into the owning TemporalNetwork.
struct Timeslice {
  int index = 1;  ///< 1-based
  Timestamp t_start = 0;
  Timestamp t_end = 0;  ///< inclusive
  std::span<const TemporalEdge> edges;

  Timestamp length() const { return t_end - t_start + 1; }
};

struct Slicing {
  std::vector<Timeslice> slices;
  int requested = 0;
  /// True when the requested count would have produced trailing zero-width
  /// slices and was reduced.
  bool clamped = false;
};

/// Splits [t_min, t_max] into slices of length ceil(T/k); the last one may be
/// shorter. Throws Error(kInvalidSliceCount) unless 1 <= k <= T.
Slicing uniform_slices(const TemporalNetwork& net, int k);

struct SliceSuggestion {
  int min_count = 1;
  int default_count = 1;
  int max_count = 1;
};

/// Density-driven range of reasonable slice counts.
///
/// Every edge carries the same mass; the target mass per slice is
/// |E| / baseline. Window starts are active timestamps spaced at least
/// `window` apart. For each start the shortest length reaching the target is
/// measured; when the remaining stream ends first the length is extrapolated
/// from the remaining rate (capped at T). Counts are ceil(T / length) for the
/// largest, mean and smallest length.
///
/// `window` defaults to ceil(T/100).
SliceSuggestion suggest_slice_counts(const TemporalNetwork& net,
                                     std::optional<Timestamp> window = std::nullopt,
                                     int baseline = 50);

}  // namespace tempocom
