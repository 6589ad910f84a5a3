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

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tempocom/community.hpp"
#include "tempocom/layout.hpp"
#include "tempocom/network.hpp"
#include "tempocom/sampling.hpp"
#include "tempocom/slicing.hpp"
#include "tempocom/taxonomy.hpp"

namespace tempocom {

struct AnalysisConfig {
  int slice_count = 10;
  int min_community_size = 3;
  SamplingSpec sampling;
  std::uint64_t seed = 42;
  double tau = 0.5;
  StructuralParams structural;
  TemporalParams temporal;
  int supernode_threshold = 200;
  int layout_iterations = 300;
  std::optional<Timestamp> suggestion_window;
  int suggestion_baseline = 50;
  /// Worker threads for per-slice work; 0 picks hardware concurrency.
  int threads = 0;
};

/// Throws Error(kInvalidConfig).
void validate(const AnalysisConfig& cfg);

enum class Stage { kSampling, kSuggest, kSlicing, kDetection, kLinking, kClassification, kLayout, kDone };

std::string_view to_string(Stage s);

/// Cooperative cancellation plus progress reporting for long runs.
struct PipelineControl {
  std::atomic<bool> cancel{false};
  std::atomic<int> stage{static_cast<int>(Stage::kSampling)};
};

struct StageTimings {
  double suggest = 0, detection = 0, structural = 0, temporal = 0, evolution = 0, layout = 0,
         total = 0;
};

/// Full pipeline output. Immutable once built; the slices and communities
/// reference the owned (sampled) network.
struct AnalysisResult {
  AnalysisConfig config;
  NetworkSummary input_summary;  ///< before sampling
  BuildReport build_report;
  std::shared_ptr<const TemporalNetwork> network;  ///< analyzed network
  NetworkSummary summary;
  SliceSuggestion suggestion;
  Slicing slicing;
  std::vector<std::optional<double>> slice_modularity;
  double mean_modularity = 0.0;
  std::vector<Community> communities;  ///< sorted by key
  std::vector<EvolutionLink> links;
  std::size_t truncated_links = 0;
  GridLayout grid;
  StageTimings timings;

  std::span<const Timeslice> slices() const { return slicing.slices; }
  const Timeslice& slice(int index) const { return slicing.slices.at(index - 1); }
  /// Communities of one slice, in local id order.
  std::span<const Community> slice_communities(int index) const;
  const Community* find(CommunityKey key) const;
  std::vector<int> communities_per_slice() const;
};

/// Runs sampling, slicing, detection, linking, classification and the grid
/// layout. Throws Error(kInvalidConfig) for bad parameters and
/// Error(kCancelled) if `control` requests it.
AnalysisResult run_analysis(const TemporalNetwork& input, const AnalysisConfig& cfg,
                            PipelineControl* control = nullptr,
                            const BuildReport& build_report = {});

}  // namespace tempocom
