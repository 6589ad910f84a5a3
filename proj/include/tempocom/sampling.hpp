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

#include <cstdint>
#include <string>
#include <span>
#include <string_view>

#include "tempocom/network.hpp"

namespace tempocom {

enum class SamplingMethod { kNone, kRandomNode, kRandomEdge, kSnowball };

struct SamplingSpec {
  SamplingMethod method = SamplingMethod::kNone;
  double fraction = 1.0;  ///< RandomNode / RandomEdge
  int seeds = 10;         ///< Snowball start nodes
  int waves = 2;          ///< Snowball BFS hops
  std::uint64_t rng_seed = 0;

  friend bool operator==(const SamplingSpec&, const SamplingSpec&) = default;
};

/// Throws Error(kInvalidConfig) on out-of-range parameters.
void validate(const SamplingSpec& spec);

/// Parses the compact CLI form: `none`, `node:F`, `edge:F`,
/// `snowball[:SEEDS[:WAVES]]`. The rng seed is left at 0.
SamplingSpec parse_sampling(std::string_view text);

/// Inverse of parse_sampling.
std::string describe(const SamplingSpec& spec);

/// Reduces a network before analysis. Deterministic in (net, spec).
///
/// RandomNode keeps a prefix of one seeded node permutation, so outputs for
/// growing fractions under one seed are nested. Snowball expands over the
/// time-aggregated graph.
///
/// Throws Error(kEmptySample) if nothing survives.
TemporalNetwork apply_sampling(const TemporalNetwork& net, const SamplingSpec& spec);

/// Snowball expansion from explicit start nodes: `waves` BFS hops over the
/// time-aggregated graph, then every temporal edge induced by the reached set.
TemporalNetwork snowball_from(const TemporalNetwork& net, std::span<const NodeId> starts,
                              int waves);

}  // namespace tempocom
