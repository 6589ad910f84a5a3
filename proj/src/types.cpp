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

#include "tempocom/types.hpp"

#include "tempocom/error.hpp"

namespace tempocom {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyNetwork: return "EmptyNetwork";
    case ErrorKind::kNoValidEdges: return "NoValidEdges";
    case ErrorKind::kInvalidSliceCount: return "InvalidSliceCount";
    case ErrorKind::kInvalidConfig: return "InvalidConfig";
    case ErrorKind::kEmptySample: return "EmptySample";
    case ErrorKind::kEmptyGraph: return "EmptyGraph";
    case ErrorKind::kBelowThreshold: return "BelowThreshold";
    case ErrorKind::kNodeNotInCommunity: return "NodeNotInCommunity";
    case ErrorKind::kNotFound: return "NotFound";
    case ErrorKind::kCancelled: return "Cancelled";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

std::string_view to_string(StructuralCategory c) {
  switch (c) {
    case StructuralCategory::kTree: return "Tree";
    case StructuralCategory::kStar: return "Star";
    case StructuralCategory::kCircular: return "Circular";
    case StructuralCategory::kClique: return "Clique";
    case StructuralCategory::kLowConnectivity: return "Low-connectivity";
  }
  return "";
}

int temporal_index(TemporalCategory c) {
  return (c.frequency == Frequency::kContinuous ? 0 : 2) +
         (c.dispersion == Dispersion::kGrouped ? 0 : 1);
}

std::string_view to_string(TemporalCategory c) {
  static constexpr std::string_view kNames[] = {"Continuous/Grouped", "Continuous/Dispersed",
                                                "Sporadic/Grouped", "Sporadic/Dispersed"};
  return kNames[temporal_index(c)];
}

std::string_view to_string(EvolutionEvent e) {
  switch (e) {
    case EvolutionEvent::kBirth: return "Birth";
    case EvolutionEvent::kDeath: return "Death";
    case EvolutionEvent::kGrow: return "Grow";
    case EvolutionEvent::kContract: return "Contract";
    case EvolutionEvent::kSplit: return "Split";
    case EvolutionEvent::kMerge: return "Merge";
    case EvolutionEvent::kPreserve: return "Preserve";
  }
  return "";
}

std::string_view to_string(SizeChange k) {
  switch (k) {
    case SizeChange::kGrow: return "Grow";
    case SizeChange::kContract: return "Contract";
    case SizeChange::kPreserve: return "Preserve";
  }
  return "";
}

std::optional<StructuralCategory> parse_structural(std::string_view s) {
  for (auto c : kStructuralCategories)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

std::optional<TemporalCategory> parse_temporal(std::string_view s) {
  for (auto c : kTemporalCategories)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

std::optional<EvolutionEvent> parse_event(std::string_view s) {
  for (auto e : kEvolutionEvents)
    if (to_string(e) == s) return e;
  return std::nullopt;
}

std::vector<EvolutionEvent> EventSet::to_vector() const {
  std::vector<EvolutionEvent> out;
  for (auto e : kEvolutionEvents)
    if (contains(e)) out.push_back(e);
  return out;
}

EventSet make_event_set(std::initializer_list<EvolutionEvent> events) {
  EventSet s;
  for (auto e : events) s.insert(e);
  return s;
}

}  // namespace tempocom
