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

#include "tempocom/serialize.hpp"

#include <cmath>

#include "random.hpp"
#include "tempocom/error.hpp"
#include "tempocom/metrics.hpp"

namespace tempocom {
namespace {

json key_json(CommunityKey k) { return {{"slice", k.slice}, {"local", k.local}}; }

json label_json(const std::optional<std::string>& l) { return l ? json(*l) : json(nullptr); }

json events_json(const EventSet& s) {
  json out = json::array();
  for (auto e : s.to_vector()) out.push_back(to_string(e));
  return out;
}

std::string link_event(const EvolutionLink& l) {
  if (l.split_branch && l.merge_branch) return "Split/Merge";
  if (l.split_branch) return "Split";
  if (l.merge_branch) return "Merge";
  return std::string(to_string(l.change));
}

std::uint64_t view_seed(const AnalysisResult& r, CommunityKey k) {
  return detail::derive_seed(r.config.seed, static_cast<std::uint64_t>(k.slice),
                             static_cast<std::uint64_t>(k.local) + 1);
}

const Community& require(const AnalysisResult& r, CommunityKey key) {
  const Community* c = r.find(key);
  if (!c)
    throw Error(ErrorKind::kNotFound, "no community " + std::to_string(key.slice) + "/" +
                                          std::to_string(key.local));
  return *c;
}

json positions_json(const NodePositions& pos, int row) {
  return {{"x", rounded(pos(row, 0))}, {"y", rounded(pos(row, 1))}};
}

template <typename T>
T get_checked(const json& j, const char* name) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorKind::kInvalidConfig, std::string("bad value for '") + name + "'");
  }
}

}  // namespace

double rounded(double v, int digits) {
  const double scale = std::pow(10.0, digits);
  const double out = std::round(v * scale) / scale;
  return out == 0.0 ? 0.0 : out;  // no "-0.0" in payloads
}

json summary_json(const NetworkSummary& s) {
  return {{"nodes", s.nodes},   {"edges", s.edges}, {"timestamps", s.timestamps},
          {"t_min", s.t_min},   {"t_max", s.t_max}, {"metadata_categories", s.categories}};
}

json suggestion_json(const SliceSuggestion& s) {
  return {{"min", s.min_count}, {"default", s.default_count}, {"max", s.max_count}};
}

json config_json(const AnalysisConfig& cfg) {
  json j = {
      {"slice_count", cfg.slice_count},
      {"min_community_size", cfg.min_community_size},
      {"sampling", describe(cfg.sampling)},
      {"seed", cfg.seed},
      {"tau", cfg.tau},
      {"structural",
       {{"clique_density_min", cfg.structural.clique_density_min},
        {"star_hub_min", cfg.structural.star_hub_min},
        {"star_leaf_median_max", cfg.structural.star_leaf_median_max},
        {"circular_degree2_min", cfg.structural.circular_degree2_min},
        {"tree_slack", cfg.structural.tree_slack}}},
      {"temporal", {{"dispersion_alpha", cfg.temporal.dispersion_alpha}}},
      {"supernode_threshold", cfg.supernode_threshold},
      {"layout_iterations", cfg.layout_iterations},
      {"suggestion_baseline", cfg.suggestion_baseline},
      {"suggestion_window", cfg.suggestion_window ? json(*cfg.suggestion_window) : json(nullptr)},
  };
  return j;
}

AnalysisConfig config_from_json(const json& j, AnalysisConfig cfg) {
  if (!j.is_object()) throw Error(ErrorKind::kInvalidConfig, "config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "slice_count") {
      cfg.slice_count = get_checked<int>(value, "slice_count");
    } else if (key == "min_community_size") {
      cfg.min_community_size = get_checked<int>(value, "min_community_size");
    } else if (key == "sampling") {
      cfg.sampling = parse_sampling(get_checked<std::string>(value, "sampling"));
    } else if (key == "seed") {
      cfg.seed = get_checked<std::uint64_t>(value, "seed");
    } else if (key == "tau") {
      cfg.tau = get_checked<double>(value, "tau");
    } else if (key == "supernode_threshold") {
      cfg.supernode_threshold = get_checked<int>(value, "supernode_threshold");
    } else if (key == "layout_iterations") {
      cfg.layout_iterations = get_checked<int>(value, "layout_iterations");
    } else if (key == "suggestion_baseline") {
      cfg.suggestion_baseline = get_checked<int>(value, "suggestion_baseline");
    } else if (key == "suggestion_window") {
      if (value.is_null()) cfg.suggestion_window.reset();
      else cfg.suggestion_window = get_checked<Timestamp>(value, "suggestion_window");
    } else if (key == "structural") {
      if (!value.is_object()) throw Error(ErrorKind::kInvalidConfig, "'structural' must be an object");
      for (const auto& [k, v] : value.items()) {
        auto& s = cfg.structural;
        if (k == "clique_density_min") s.clique_density_min = get_checked<double>(v, "clique_density_min");
        else if (k == "star_hub_min") s.star_hub_min = get_checked<double>(v, "star_hub_min");
        else if (k == "star_leaf_median_max") s.star_leaf_median_max = get_checked<double>(v, "star_leaf_median_max");
        else if (k == "circular_degree2_min") s.circular_degree2_min = get_checked<double>(v, "circular_degree2_min");
        else if (k == "tree_slack") s.tree_slack = get_checked<int>(v, "tree_slack");
        else throw Error(ErrorKind::kInvalidConfig, "unknown structural parameter '" + k + "'");
      }
    } else if (key == "temporal") {
      if (!value.is_object()) throw Error(ErrorKind::kInvalidConfig, "'temporal' must be an object");
      for (const auto& [k, v] : value.items()) {
        if (k == "dispersion_alpha") cfg.temporal.dispersion_alpha = get_checked<double>(v, "dispersion_alpha");
        else throw Error(ErrorKind::kInvalidConfig, "unknown temporal parameter '" + k + "'");
      }
    } else {
      throw Error(ErrorKind::kInvalidConfig, "unknown config field '" + key + "'");
    }
  }
  validate(cfg);
  return cfg;
}

json analysis_json(const AnalysisResult& r) {
  const auto& net = *r.network;
  json cfg = config_json(r.config);
  cfg["effective_slice_count"] = r.slicing.slices.size();
  cfg["slices_clamped"] = r.slicing.clamped;

  json slices = json::array();
  const auto per_slice = r.communities_per_slice();
  for (const auto& s : r.slicing.slices) {
    const auto& q = r.slice_modularity[s.index - 1];
    slices.push_back({{"index", s.index},
                      {"t_start", s.t_start},
                      {"t_end", s.t_end},
                      {"edges", s.edges.size()},
                      {"communities", per_slice[s.index - 1]},
                      {"modularity", q ? json(rounded(*q, 6)) : json(nullptr)}});
  }

  json communities = json::array();
  for (const auto& c : r.communities) {
    json members = json::array();
    for (NodeId v : c.members) members.push_back(net.node_name(v));
    communities.push_back({{"slice", c.key.slice},
                           {"local", c.key.local},
                           {"size", c.size()},
                           {"intra_edges", c.intra_edges.size()},
                           {"structural", to_string(c.structural)},
                           {"temporal", to_string(c.temporal)},
                           {"events", events_json(c.events)},
                           {"members", std::move(members)}});
  }

  json links = json::array();
  for (const auto& l : r.links) {
    links.push_back({{"from", key_json(l.from)},
                     {"to", key_json(l.to)},
                     {"overlap", l.overlap},
                     {"similarity", rounded(l.similarity)},
                     {"kind", to_string(l.change)},
                     {"split_branch", l.split_branch},
                     {"merge_branch", l.merge_branch}});
  }

  return {{"config", std::move(cfg)},
          {"input_summary", summary_json(r.input_summary)},
          {"summary", summary_json(r.summary)},
          {"build_report",
           {{"self_loops_dropped", r.build_report.self_loops_dropped},
            {"duplicates_collapsed", r.build_report.duplicates_collapsed},
            {"dropped_metadata_keys", r.build_report.dropped_metadata_keys}}},
          {"suggestion", suggestion_json(r.suggestion)},
          {"mean_modularity", rounded(r.mean_modularity, 6)},
          {"community_count", r.communities.size()},
          {"slices", std::move(slices)},
          {"communities", std::move(communities)},
          {"links", std::move(links)},
          {"truncated_links", r.truncated_links}};
}

json matrix_json(const TaxonomyMatrix& m) {
  json counts = json::array();
  for (Eigen::Index i = 0; i < m.counts.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.counts.cols(); ++j) row.push_back(m.counts(i, j));
    counts.push_back(std::move(row));
  }
  return {{"x", to_string(m.x)},
          {"y", to_string(m.y)},
          {"x_labels", m.x_labels},
          {"y_labels", m.y_labels},
          {"counts", std::move(counts)}};
}

json globalview_json(const AnalysisResult& r) {
  const auto& g = r.grid;
  json circles = json::array();
  for (const auto& c : r.communities) {
    const int col = c.key.slice - 1;
    const int row = g.row(c.key);
    circles.push_back({{"slice", c.key.slice},
                       {"local", c.key.local},
                       {"column", col},
                       {"row", row},
                       {"size", c.size()},
                       {"structural", to_string(c.structural)},
                       {"temporal", to_string(c.temporal)},
                       {"events", events_json(c.events)},
                       {"tooltip",
                        {{"timeslice", c.key.slice},
                         {"nodes", c.size()},
                         {"position", {{"column", col}, {"row", row}}},
                         {"structural", to_string(c.structural)},
                         {"temporal", to_string(c.temporal)},
                         {"evolution", events_json(c.events)}}}});
  }
  json links = json::array();
  for (std::size_t i = 0; i < g.links.size(); ++i) {
    const auto& gl = g.links[i];
    const auto& l = r.links[i];
    const int from_size = r.find(l.from)->size();
    const int to_size = r.find(l.to)->size();
    links.push_back({{"from", {{"slice", gl.from.slice}, {"local", gl.from.local}, {"row", gl.from_row}}},
                     {"to", {{"slice", gl.to.slice}, {"local", gl.to.local}, {"row", gl.to_row}}},
                     {"thickness", gl.thickness},
                     {"kind", to_string(l.change)},
                     {"split_branch", l.split_branch},
                     {"merge_branch", l.merge_branch},
                     {"tooltip",
                      {{"from_timeslice", l.from.slice},
                       {"to_timeslice", l.to.slice},
                       {"from_size", from_size},
                       {"to_size", to_size},
                       {"overlap", l.overlap},
                       {"event", link_event(l)}}}});
  }
  return {{"columns", r.slicing.slices.size()},
          {"rows", g.rows},
          {"total_link_length", rounded(total_link_length(g))},
          {"circles", std::move(circles)},
          {"links", std::move(links)}};
}

json community_view_json(const AnalysisResult& r, CommunityKey key) {
  const Community& c = require(r, key);
  const auto& net = *r.network;
  const Timeslice& slice = r.slice(key.slice);
  const std::uint64_t seed = view_seed(r, key);

  const SliceGraph g = SliceGraph::from_members(c.members, c.intra_edges);
  SpringOptions spring;
  spring.iterations = r.config.layout_iterations;
  const NodePositions pos = spring_layout(g, seed, spring);

  json nodes = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    json n = positions_json(pos, v);
    n["id"] = net.node_name(g.node(v));
    n["label"] = label_json(net.label(g.node(v)));
    nodes.push_back(std::move(n));
  }
  json edges = json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : g.neighbors(v))
      if (u > v) edges.push_back({v, u});

  const bool summarized = c.size() > r.config.supernode_threshold;
  json supergraph = nullptr;
  if (summarized) {
    const SuperGraph sg = summarize_supernodes(c, net, r.config.supernode_threshold, seed);
    json supernodes = json::array();
    for (const auto& sn : sg.supernodes) {
      json members = json::array();
      for (NodeId v : sn.members) members.push_back(net.node_name(v));
      json s = positions_json(sg.positions, sn.id);
      s["id"] = sn.id;
      s["size"] = sn.size();
      s["label"] = label_json(sn.label);
      s["members"] = std::move(members);
      supernodes.push_back(std::move(s));
    }
    json superedges = json::array();
    for (const auto& se : sg.superedges)
      superedges.push_back({{"a", se.a}, {"b", se.b}, {"weight", se.weight}});
    supergraph = {{"supernodes", std::move(supernodes)}, {"superedges", std::move(superedges)}};
  }

  const TamView tam = tam_rows(c, slice, net);
  json rows = json::array();
  for (const auto& row : tam.rows)
    rows.push_back({{"node", net.node_name(row.node)},
                    {"label", label_json(net.label(row.node))},
                    {"active", row.active}});

  const CommunityDetails d = community_details(c, slice);
  json metrics = json::array();
  for (const auto& m : community_node_metrics(c, net, seed))
    metrics.push_back({{"node", net.node_name(m.node)},
                       {"label", label_json(m.label)},
                       {"degree", rounded(m.degree)},
                       {"closeness", rounded(m.closeness)},
                       {"betweenness", rounded(m.betweenness)}});

  return {{"key", key_json(key)},
          {"summarized", summarized},
          {"structural", to_string(c.structural)},
          {"temporal", to_string(c.temporal)},
          {"events", events_json(c.events)},
          {"nodes", std::move(nodes)},
          {"edges", std::move(edges)},
          {"supergraph", std::move(supergraph)},
          {"tam",
           {{"t_start", slice.t_start},
            {"t_end", slice.t_end},
            {"rows", std::move(rows)},
            {"edge_series", tam.edge_series}}},
          {"details",
           {{"nodes", d.nodes},
            {"edges", d.edges},
            {"active_timestamps", d.active_timestamps},
            {"activity_percent", rounded(d.activity_percent)}}},
          {"node_metrics", std::move(metrics)}};
}

json node_json(const AnalysisResult& r, CommunityKey key, const std::string& node) {
  const Community& c = require(r, key);
  const auto id = r.network->find_node(node);
  if (!id) throw Error(ErrorKind::kNodeNotInCommunity, "unknown node '" + node + "'");
  const NodeDetails d = node_details(c, *id, *r.network, view_seed(r, key));
  return {{"key", key_json(key)},
          {"node", node},
          {"label", label_json(d.label)},
          {"degree", rounded(d.degree)},
          {"closeness", rounded(d.closeness)},
          {"betweenness", rounded(d.betweenness)}};
}

json export_json(const AnalysisResult& r) {
  json matrices = json::array();
  for (auto y : {Taxonomy::kStructural, Taxonomy::kTemporal, Taxonomy::kEvolution})
    for (auto x : {Taxonomy::kStructural, Taxonomy::kTemporal, Taxonomy::kEvolution})
      matrices.push_back(matrix_json(taxonomy_matrix(r.communities, x, y)));
  json views = json::array();
  for (const auto& c : r.communities) views.push_back(community_view_json(r, c.key));
  return {{"format", "tempocom-analysis"},
          {"version", 1},
          {"analysis", analysis_json(r)},
          {"globalview", globalview_json(r)},
          {"matrices", std::move(matrices)},
          {"community_views", std::move(views)}};
}

}  // namespace tempocom
