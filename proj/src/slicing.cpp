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

#include "tempocom/slicing.hpp"

#include <algorithm>
#include <cmath>

#include "tempocom/error.hpp"

namespace tempocom {
namespace {

Timestamp ceil_div(Timestamp a, Timestamp b) { return (a + b - 1) / b; }

int clamp_count(double v, Timestamp span) {
  return static_cast<int>(std::clamp<double>(v, 1.0, static_cast<double>(span)));
}

}  // namespace

Slicing uniform_slices(const TemporalNetwork& net, int k) {
  const Timestamp span = net.span();
  if (k < 1 || k > span)
    throw Error(ErrorKind::kInvalidSliceCount, "slice count " + std::to_string(k) +
                                                   " outside [1, " + std::to_string(span) + "]");
  const Timestamp len = ceil_div(span, k);
  // A ceiling overshoot would leave trailing zero-width slices.
  const auto effective = static_cast<int>(ceil_div(span, len));

  Slicing out;
  out.requested = k;
  out.clamped = effective != k;
  out.slices.reserve(effective);
  auto edges = net.edges();
  auto cursor = edges.begin();
  for (int i = 0; i < effective; ++i) {
    Timeslice s;
    s.index = i + 1;
    s.t_start = net.t_min() + i * len;
    s.t_end = std::min(s.t_start + len - 1, net.t_max());
    auto end = std::upper_bound(cursor, edges.end(), s.t_end,
                                [](Timestamp t, const TemporalEdge& e) { return t < e.timestamp; });
    s.edges = std::span<const TemporalEdge>(cursor, end);
    cursor = end;
    out.slices.push_back(s);
  }
  return out;
}

SliceSuggestion suggest_slice_counts(const TemporalNetwork& net, std::optional<Timestamp> window,
                                     int baseline) {
  const Timestamp span = net.span();
  if (span <= 1) return {1, 1, 1};
  const Timestamp stride = window.value_or(ceil_div(span, 100));
  if (stride < 1) throw Error(ErrorKind::kInvalidConfig, "suggestion window must be >= 1");
  if (baseline < 2) throw Error(ErrorKind::kInvalidConfig, "suggestion baseline must be >= 2");

  // Distinct active timestamps with cumulative edge counts; sparse so raw
  // epoch-second streams stay cheap.
  std::vector<Timestamp> times;
  std::vector<std::int64_t> cum;  // cum[j] = edges with timestamp <= times[j]
  for (const auto& e : net.edges()) {
    if (times.empty() || times.back() != e.timestamp) {
      times.push_back(e.timestamp);
      cum.push_back(cum.empty() ? 0 : cum.back());
    }
    ++cum.back();
  }
  const auto total = static_cast<double>(cum.back());
  const double target = total / baseline;

  std::vector<double> lengths;
  std::size_t j = 0;
  while (j < times.size()) {
    const Timestamp p = times[j];
    const std::int64_t before = j == 0 ? 0 : cum[j - 1];
    const double remaining = total - static_cast<double>(before);
    double len;
    if (remaining >= target) {
      auto it = std::lower_bound(cum.begin() + j, cum.end(), before + target,
                                 [](std::int64_t a, double b) { return static_cast<double>(a) < b; });
      len = static_cast<double>(times[it - cum.begin()] - p + 1);
    } else {
      // The stream ends first: extrapolate from the remaining rate.
      len = static_cast<double>(net.t_max() - p + 1) * target / remaining;
    }
    lengths.push_back(std::min(len, static_cast<double>(span)));
    j = static_cast<std::size_t>(std::lower_bound(times.begin() + j, times.end(), p + stride) -
                                 times.begin());
  }
  if (lengths.empty()) return {1, 1, 1};

  const auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
  double mean = 0;
  for (double l : lengths) mean += l;
  mean /= static_cast<double>(lengths.size());

  // No more slices than there are active timestamps.
  const auto T = static_cast<double>(span);
  const auto limit = static_cast<Timestamp>(times.size());
  SliceSuggestion s;
  s.min_count = clamp_count(std::ceil(T / *hi), limit);
  s.default_count = clamp_count(std::ceil(T / mean), limit);
  s.max_count = clamp_count(std::ceil(T / *lo), limit);
  return s;
}

}  // namespace tempocom
