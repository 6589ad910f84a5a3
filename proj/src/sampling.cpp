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

#include "tempocom/sampling.hpp"

#include <charconv>
#include <cmath>
#include <queue>

#include "random.hpp"
#include "tempocom/error.hpp"

namespace tempocom {
namespace {

TemporalNetwork rebuild(const TemporalNetwork& net, const std::vector<TemporalEdge>& edges) {
  if (edges.empty()) throw Error(ErrorKind::kEmptySample, "sampling kept no edges");
  std::vector<EdgeRecord> records;
  records.reserve(edges.size());
  for (const auto& e : edges)
    records.push_back({net.node_name(e.source), net.node_name(e.target), e.timestamp});
  Metadata meta;
  if (net.has_metadata()) {
    std::vector<bool> seen(net.node_count(), false);
    for (const auto& e : edges) seen[e.source] = seen[e.target] = true;
    for (NodeId v = 0; v < net.node_count(); ++v)
      if (seen[v] && net.label(v)) meta.emplace(net.node_name(v), *net.label(v));
  }
  return build_network(records, meta);
}

std::vector<TemporalEdge> induced(const TemporalNetwork& net, const std::vector<bool>& keep) {
  std::vector<TemporalEdge> out;
  for (const auto& e : net.edges())
    if (keep[e.source] && keep[e.target]) out.push_back(e);
  return out;
}

std::size_t keep_count(double fraction, std::size_t total) {
  return std::min(total, static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(total))));
}

double parse_double(std::string_view s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorKind::kInvalidConfig, "bad number '" + std::string(s) + "' in sampling spec");
  return v;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorKind::kInvalidConfig, "bad integer '" + std::string(s) + "' in sampling spec");
  return v;
}

}  // namespace

void validate(const SamplingSpec& spec) {
  switch (spec.method) {
    case SamplingMethod::kNone:
      return;
    case SamplingMethod::kRandomNode:
    case SamplingMethod::kRandomEdge:
      if (!(spec.fraction > 0.0 && spec.fraction <= 1.0))
        throw Error(ErrorKind::kInvalidConfig, "sampling fraction must be in (0, 1]");
      return;
    case SamplingMethod::kSnowball:
      if (spec.seeds < 1 || spec.waves < 1)
        throw Error(ErrorKind::kInvalidConfig, "snowball seeds and waves must be >= 1");
      return;
  }
}

SamplingSpec parse_sampling(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  SamplingSpec spec;
  const auto& kind = parts[0];
  if (kind == "none" && parts.size() == 1) {
    spec.method = SamplingMethod::kNone;
  } else if ((kind == "node" || kind == "edge") && parts.size() == 2) {
    spec.method = kind == "node" ? SamplingMethod::kRandomNode : SamplingMethod::kRandomEdge;
    spec.fraction = parse_double(parts[1]);
  } else if (kind == "snowball" && parts.size() <= 3) {
    spec.method = SamplingMethod::kSnowball;
    if (parts.size() > 1) spec.seeds = parse_int(parts[1]);
    if (parts.size() > 2) spec.waves = parse_int(parts[2]);
  } else {
    throw Error(ErrorKind::kInvalidConfig, "unknown sampling spec '" + std::string(text) + "'");
  }
  validate(spec);
  return spec;
}

std::string describe(const SamplingSpec& spec) {
  auto num = [](double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
  };
  switch (spec.method) {
    case SamplingMethod::kNone: return "none";
    case SamplingMethod::kRandomNode: return "node:" + num(spec.fraction);
    case SamplingMethod::kRandomEdge: return "edge:" + num(spec.fraction);
    case SamplingMethod::kSnowball:
      return "snowball:" + std::to_string(spec.seeds) + ":" + std::to_string(spec.waves);
  }
  return "none";
}

TemporalNetwork snowball_from(const TemporalNetwork& net, std::span<const NodeId> starts,
                              int waves) {
  const auto n = net.node_count();
  std::vector<std::vector<NodeId>> adj(n);
  for (const auto& e : net.edges()) {
    adj[e.source].push_back(e.target);
    adj[e.target].push_back(e.source);
  }
  std::vector<int> depth(n, -1);
  std::queue<NodeId> frontier;
  for (NodeId s : starts) {
    if (depth.at(s) < 0) {
      depth[s] = 0;
      frontier.push(s);
    }
  }
  while (!frontier.empty()) {
    NodeId v = frontier.front();
    frontier.pop();
    if (depth[v] == waves) continue;
    for (NodeId u : adj[v]) {
      if (depth[u] >= 0) continue;
      depth[u] = depth[v] + 1;
      frontier.push(u);
    }
  }
  std::vector<bool> keep(n);
  for (std::size_t v = 0; v < n; ++v) keep[v] = depth[v] >= 0;
  return rebuild(net, induced(net, keep));
}

TemporalNetwork apply_sampling(const TemporalNetwork& net, const SamplingSpec& spec) {
  validate(spec);
  detail::Rng rng(spec.rng_seed);
  switch (spec.method) {
    case SamplingMethod::kNone:
      return net;
    case SamplingMethod::kRandomNode: {
      auto order = detail::permutation(static_cast<int>(net.node_count()), rng);
      std::vector<bool> keep(net.node_count(), false);
      const auto k = keep_count(spec.fraction, net.node_count());
      for (std::size_t i = 0; i < k; ++i) keep[order[i]] = true;
      return rebuild(net, induced(net, keep));
    }
    case SamplingMethod::kRandomEdge: {
      auto order = detail::permutation(static_cast<int>(net.edge_count()), rng);
      const auto k = keep_count(spec.fraction, net.edge_count());
      order.resize(k);
      std::sort(order.begin(), order.end());
      std::vector<TemporalEdge> kept;
      kept.reserve(k);
      for (int i : order) kept.push_back(net.edges()[i]);
      return rebuild(net, kept);
    }
    case SamplingMethod::kSnowball: {
      auto order = detail::permutation(static_cast<int>(net.node_count()), rng);
      const auto k = std::min<std::size_t>(spec.seeds, net.node_count());
      std::vector<NodeId> starts(order.begin(), order.begin() + k);
      return snowball_from(net, starts, spec.waves);
    }
  }
  return net;
}

}  // namespace tempocom
