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

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace tempocom {

using NodeId = std::uint32_t;
using Timestamp = std::int64_t;

/// Undirected timestamped edge over interned node ids. Stored canonically with
/// `source < target`.
struct TemporalEdge {
  NodeId source = 0;
  NodeId target = 0;
  Timestamp timestamp = 0;

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

/// Canonical order: (timestamp, min-id, max-id).
inline bool edge_less(const TemporalEdge& a, const TemporalEdge& b) {
  if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
  if (a.source != b.source) return a.source < b.source;
  return a.target < b.target;
}

enum class StructuralCategory { kTree, kStar, kCircular, kClique, kLowConnectivity };

enum class Frequency { kContinuous, kSporadic };
enum class Dispersion { kGrouped, kDispersed };

struct TemporalCategory {
  Frequency frequency = Frequency::kSporadic;
  Dispersion dispersion = Dispersion::kDispersed;

  friend bool operator==(const TemporalCategory&, const TemporalCategory&) = default;
};

enum class EvolutionEvent { kBirth, kDeath, kGrow, kContract, kSplit, kMerge, kPreserve };

inline constexpr std::array kStructuralCategories{
    StructuralCategory::kTree, StructuralCategory::kStar, StructuralCategory::kCircular,
    StructuralCategory::kClique, StructuralCategory::kLowConnectivity};

inline constexpr std::array kTemporalCategories{
    TemporalCategory{Frequency::kContinuous, Dispersion::kGrouped},
    TemporalCategory{Frequency::kContinuous, Dispersion::kDispersed},
    TemporalCategory{Frequency::kSporadic, Dispersion::kGrouped},
    TemporalCategory{Frequency::kSporadic, Dispersion::kDispersed}};

inline constexpr std::array kEvolutionEvents{
    EvolutionEvent::kBirth, EvolutionEvent::kDeath,    EvolutionEvent::kGrow,
    EvolutionEvent::kContract, EvolutionEvent::kSplit, EvolutionEvent::kMerge,
    EvolutionEvent::kPreserve};

std::string_view to_string(StructuralCategory c);
std::string_view to_string(TemporalCategory c);
std::string_view to_string(EvolutionEvent e);

/// Index into kTemporalCategories.
int temporal_index(TemporalCategory c);

std::optional<StructuralCategory> parse_structural(std::string_view s);
std::optional<TemporalCategory> parse_temporal(std::string_view s);
std::optional<EvolutionEvent> parse_event(std::string_view s);

/// Small set of evolution events.
class EventSet {
 public:
  void insert(EvolutionEvent e) { bits_ |= bit(e); }
  bool contains(EvolutionEvent e) const { return (bits_ & bit(e)) != 0; }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }

  /// Members in kEvolutionEvents order.
  std::vector<EvolutionEvent> to_vector() const;

  friend bool operator==(const EventSet&, const EventSet&) = default;

 private:
  static unsigned bit(EvolutionEvent e) { return 1u << static_cast<unsigned>(e); }
  unsigned bits_ = 0;
};

EventSet make_event_set(std::initializer_list<EvolutionEvent> events);

struct CommunityKey {
  int slice = 0;  ///< 1-based timeslice index.
  int local = 0;  ///< 0-based id inside the slice.

  friend auto operator<=>(const CommunityKey&, const CommunityKey&) = default;
};

/// A community detected in one timeslice.
struct Community {
  CommunityKey key;
  std::vector<NodeId> members;            ///< sorted ascending
  std::vector<TemporalEdge> intra_edges;  ///< canonical order
  StructuralCategory structural = StructuralCategory::kLowConnectivity;
  TemporalCategory temporal;
  EventSet events;

  int size() const { return static_cast<int>(members.size()); }
};

enum class SizeChange { kGrow, kContract, kPreserve };

std::string_view to_string(SizeChange k);

/// Correspondence between a community in slice t and one in slice t+1.
struct EvolutionLink {
  CommunityKey from;
  CommunityKey to;
  int overlap = 0;
  double similarity = 0.0;
  SizeChange change = SizeChange::kPreserve;
  bool split_branch = false;
  bool merge_branch = false;

  friend bool operator==(const EvolutionLink&, const EvolutionLink&) = default;
};

}  // namespace tempocom
