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

#include "tempocom/network.hpp"

#include <algorithm>
#include <set>

#include "tempocom/error.hpp"

namespace tempocom {

std::optional<NodeId> TemporalNetwork::find_node(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<EdgeRecord> TemporalNetwork::to_records() const {
  std::vector<EdgeRecord> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({names_[e.source], names_[e.target], e.timestamp});
  return out;
}

Metadata TemporalNetwork::metadata() const {
  Metadata out;
  for (NodeId v = 0; v < names_.size(); ++v)
    if (labels_[v]) out.emplace(names_[v], *labels_[v]);
  return out;
}

TemporalNetwork build_network(std::span<const EdgeRecord> edges, const Metadata& metadata,
                              BuildReport* report) {
  BuildReport local_report;
  BuildReport& rep = report ? *report : local_report;
  rep = {};

  std::vector<std::string> names;
  names.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.source == e.target) continue;
    names.push_back(e.source);
    names.push_back(e.target);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  TemporalNetwork net;
  net.index_.reserve(names.size());
  for (NodeId i = 0; i < names.size(); ++i) net.index_.emplace(names[i], i);

  net.edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.source == e.target) {
      ++rep.self_loops_dropped;
      continue;
    }
    NodeId a = net.index_.at(e.source);
    NodeId b = net.index_.at(e.target);
    if (a > b) std::swap(a, b);
    net.edges_.push_back({a, b, e.timestamp});
  }
  if (net.edges_.empty()) throw Error(ErrorKind::kEmptyNetwork, "network has no valid edges");

  std::sort(net.edges_.begin(), net.edges_.end(), edge_less);
  auto last = std::unique(net.edges_.begin(), net.edges_.end());
  rep.duplicates_collapsed = static_cast<std::size_t>(net.edges_.end() - last);
  net.edges_.erase(last, net.edges_.end());
  net.edges_.shrink_to_fit();

  net.t_min_ = net.edges_.front().timestamp;
  net.t_max_ = net.edges_.back().timestamp;

  net.labels_.assign(names.size(), std::nullopt);
  for (const auto& [node, label] : metadata) {
    auto it = net.index_.find(node);
    if (it == net.index_.end()) {
      rep.dropped_metadata_keys.push_back(node);
      continue;
    }
    net.labels_[it->second] = label;
    net.has_metadata_ = true;
  }
  net.names_ = std::move(names);
  return net;
}

NetworkSummary network_summary(const TemporalNetwork& net) {
  NetworkSummary s;
  s.nodes = net.node_count();
  s.edges = net.edge_count();
  s.t_min = net.t_min();
  s.t_max = net.t_max();
  Timestamp prev = 0;
  bool first = true;
  for (const auto& e : net.edges()) {
    if (first || e.timestamp != prev) ++s.timestamps;
    prev = e.timestamp;
    first = false;
  }
  std::set<std::string> cats;
  for (NodeId v = 0; v < net.node_count(); ++v)
    if (const auto& l = net.label(v)) cats.insert(*l);
  s.categories.assign(cats.begin(), cats.end());
  return s;
}

}  // namespace tempocom
