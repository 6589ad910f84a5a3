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

#include <string>

#include <json.hpp>

#include "tempocom/analysis.hpp"
#include "tempocom/taxonomy.hpp"

namespace tempocom {

using json = nlohmann::json;

/// Rounds to `digits` decimals for stable, compact payloads.
double rounded(double v, int digits = 4);

json summary_json(const NetworkSummary& s);
json suggestion_json(const SliceSuggestion& s);
json config_json(const AnalysisConfig& cfg);

/// Overrides fields of `base` from a JSON object. Unknown keys and bad values
/// throw Error(kInvalidConfig).
AnalysisConfig config_from_json(const json& j, AnalysisConfig base = {});

/// Network summary, slices, communities with categories, links.
json analysis_json(const AnalysisResult& r);

json matrix_json(const TaxonomyMatrix& m);

/// Grid rows plus the circle and link tooltip payloads.
json globalview_json(const AnalysisResult& r);

/// Node-link positions, optional supergraph, TAM, edge series, community
/// details and per-node metrics. Throws Error(kNotFound).
json community_view_json(const AnalysisResult& r, CommunityKey key);

/// Throws Error(kNotFound) for an unknown community and
/// Error(kNodeNotInCommunity) for a node outside it.
json node_json(const AnalysisResult& r, CommunityKey key, const std::string& node);

/// Complete offline snapshot: the analysis, the global view, every taxonomy
/// matrix pair and every community view. Same payload shapes as the API.
json export_json(const AnalysisResult& r);

}  // namespace tempocom
