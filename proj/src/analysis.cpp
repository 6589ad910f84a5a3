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

#include "tempocom/analysis.hpp"

#include <algorithm>
#include <chrono>

#include "parallel.hpp"
#include "random.hpp"
#include "tempocom/error.hpp"

namespace tempocom {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void enter(PipelineControl* control, Stage stage) {
  if (!control) return;
  if (control->cancel.load()) throw Error(ErrorKind::kCancelled, "analysis cancelled");
  control->stage = static_cast<int>(stage);
}

}  // namespace

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::kSampling: return "sampling";
    case Stage::kSuggest: return "suggest";
    case Stage::kSlicing: return "slicing";
    case Stage::kDetection: return "detection";
    case Stage::kLinking: return "linking";
    case Stage::kClassification: return "classification";
    case Stage::kLayout: return "layout";
    case Stage::kDone: return "done";
  }
  return "";
}

void validate(const AnalysisConfig& cfg) {
  if (cfg.slice_count < 1) throw Error(ErrorKind::kInvalidConfig, "slice count must be >= 1");
  if (cfg.min_community_size < 1)
    throw Error(ErrorKind::kInvalidConfig, "min community size must be >= 1");
  if (!(cfg.tau > 0.0 && cfg.tau <= 1.0))
    throw Error(ErrorKind::kInvalidConfig, "tau must be in (0, 1]");
  if (cfg.supernode_threshold < 1)
    throw Error(ErrorKind::kInvalidConfig, "supernode threshold must be >= 1");
  if (cfg.layout_iterations < 1)
    throw Error(ErrorKind::kInvalidConfig, "layout iterations must be >= 1");
  if (cfg.suggestion_baseline < 2)
    throw Error(ErrorKind::kInvalidConfig, "suggestion baseline must be >= 2");
  if (cfg.suggestion_window && *cfg.suggestion_window < 1)
    throw Error(ErrorKind::kInvalidConfig, "suggestion window must be >= 1");
  validate(cfg.sampling);
  validate(cfg.structural);
  validate(cfg.temporal);
}

std::span<const Community> AnalysisResult::slice_communities(int index) const {
  auto lo = std::lower_bound(communities.begin(), communities.end(), CommunityKey{index, 0},
                             [](const Community& c, CommunityKey k) { return c.key < k; });
  auto hi = lo;
  while (hi != communities.end() && hi->key.slice == index) ++hi;
  return {lo, hi};
}

const Community* AnalysisResult::find(CommunityKey key) const {
  auto it = std::lower_bound(communities.begin(), communities.end(), key,
                             [](const Community& c, CommunityKey k) { return c.key < k; });
  if (it == communities.end() || it->key != key) return nullptr;
  return &*it;
}

std::vector<int> AnalysisResult::communities_per_slice() const {
  std::vector<int> out(slicing.slices.size(), 0);
  for (const auto& c : communities) ++out[c.key.slice - 1];
  return out;
}

AnalysisResult run_analysis(const TemporalNetwork& input, const AnalysisConfig& cfg,
                            PipelineControl* control, const BuildReport& build_report) {
  validate(cfg);
  const auto start = Clock::now();
  AnalysisResult r;
  r.config = cfg;
  r.config.sampling.rng_seed = cfg.seed;
  r.build_report = build_report;
  r.input_summary = network_summary(input);

  enter(control, Stage::kSampling);
  r.network = std::make_shared<const TemporalNetwork>(apply_sampling(input, r.config.sampling));
  const TemporalNetwork& net = *r.network;
  r.summary = network_summary(net);

  enter(control, Stage::kSuggest);
  auto t0 = Clock::now();
  r.suggestion = suggest_slice_counts(net, cfg.suggestion_window, cfg.suggestion_baseline);
  r.timings.suggest = seconds_since(t0);

  enter(control, Stage::kSlicing);
  r.slicing = uniform_slices(net, cfg.slice_count);
  const auto& slices = r.slicing.slices;

  enter(control, Stage::kDetection);
  t0 = Clock::now();
  std::vector<SliceCommunities> detected(slices.size());
  detail::parallel_for(slices.size(), cfg.threads, [&](std::size_t i) {
    if (control && control->cancel.load()) throw Error(ErrorKind::kCancelled, "analysis cancelled");
    detected[i] = detect_communities(slices[i], cfg.min_community_size,
                                     detail::derive_seed(cfg.seed, slices[i].index));
  });
  r.timings.detection = seconds_since(t0);

  double q_sum = 0.0;
  int q_count = 0;
  for (auto& d : detected) {
    r.slice_modularity.push_back(d.modularity);
    if (d.modularity) {
      q_sum += *d.modularity;
      ++q_count;
    }
  }
  r.mean_modularity = q_count ? q_sum / q_count : 0.0;

  enter(control, Stage::kLinking);
  std::vector<LinkReport> linked(slices.size() > 0 ? slices.size() - 1 : 0);
  detail::parallel_for(linked.size(), cfg.threads, [&](std::size_t i) {
    linked[i] = link_communities(detected[i].communities, detected[i + 1].communities, cfg.tau);
  });
  for (auto& l : linked) {
    r.links.insert(r.links.end(), l.links.begin(), l.links.end());
    r.truncated_links += l.truncated;
  }
  for (auto& d : detected)
    for (auto& c : d.communities) r.communities.push_back(std::move(c));

  enter(control, Stage::kClassification);
  t0 = Clock::now();
  detail::parallel_for(r.communities.size(), cfg.threads, [&](std::size_t i) {
    r.communities[i].structural = classify_structural(r.communities[i], cfg.structural);
  });
  r.timings.structural = seconds_since(t0);
  t0 = Clock::now();
  detail::parallel_for(r.communities.size(), cfg.threads, [&](std::size_t i) {
    auto& c = r.communities[i];
    c.temporal = classify_temporal(c, slices[c.key.slice - 1], cfg.temporal);
  });
  r.timings.temporal = seconds_since(t0);
  t0 = Clock::now();
  const auto events = classify_evolution(r.communities, r.links);
  for (std::size_t i = 0; i < events.size(); ++i) r.communities[i].events = events[i];
  r.timings.evolution = seconds_since(t0);

  enter(control, Stage::kLayout);
  t0 = Clock::now();
  r.grid = global_grid_positions(r.communities_per_slice(), r.links);
  r.timings.layout = seconds_since(t0);

  r.timings.total = seconds_since(start);
  enter(control, Stage::kDone);
  return r;
}

}  // namespace tempocom
