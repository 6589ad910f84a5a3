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

#include "tempocom/server.hpp"

#include <charconv>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>

#include <httplib.h>

#include "tempocom/error.hpp"
#include "tempocom/ingest.hpp"
#include "tempocom/serialize.hpp"

namespace tempocom {
namespace {

constexpr std::size_t kReportedLines = 10;

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyNetwork:
    case ErrorKind::kNoValidEdges:
      return 400;
    case ErrorKind::kInvalidConfig:
    case ErrorKind::kInvalidSliceCount:
    case ErrorKind::kEmptySample:
      return 422;
    case ErrorKind::kNotFound:
    case ErrorKind::kNodeNotInCommunity:
      return 404;
    case ErrorKind::kCancelled:
      return 503;
    default:
      return 500;
  }
}

ApiResponse reply(int status, const json& body) { return {status, body.dump()}; }

ApiResponse error_reply(int status, std::string_view kind, const std::string& message) {
  return reply(status, {{"error", kind}, {"message", message}});
}

ApiResponse error_reply(const Error& e) {
  return error_reply(status_for(e.kind()), to_string(e.kind()), e.what());
}

json lines_json(const std::vector<LineIssue>& issues) {
  json out = json::array();
  for (std::size_t i = 0; i < issues.size() && i < kReportedLines; ++i)
    out.push_back({{"line", issues[i].line}, {"message", issues[i].message}});
  return out;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= path.size()) {
    const auto end = path.find('/', start);
    const auto piece = path.substr(start, end == std::string::npos ? std::string::npos : end - start);
    out.push_back(piece);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

/// Analysis state shared with the worker thread, which may outlive the request
/// when the timeout fires.
struct Job {
  std::mutex mutex;
  std::condition_variable done_cv;
  bool done = false;
  std::optional<AnalysisResult> result;
  std::exception_ptr error;
  PipelineControl control;
};

}  // namespace

std::string AnalysisStore::insert(std::shared_ptr<const AnalysisResult> result) {
  std::unique_lock lock(mutex_);
  std::string id = "a" + std::to_string(next_++);
  items_.emplace(id, std::move(result));
  return id;
}

std::shared_ptr<const AnalysisResult> AnalysisStore::get(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = items_.find(id);
  return it == items_.end() ? nullptr : it->second;
}

std::size_t AnalysisStore::size() const {
  std::shared_lock lock(mutex_);
  return items_.size();
}

Api::Api(std::shared_ptr<AnalysisStore> store, ServerOptions options)
    : store_(std::move(store)), options_(std::move(options)) {}

ApiResponse Api::upload(const UploadRequest& req) const {
  AnalysisConfig cfg = options_.defaults;
  try {
    if (req.config && !req.config->empty()) {
      json j = json::parse(*req.config, nullptr, false);
      if (j.is_discarded()) return error_reply(422, "InvalidConfig", "config is not valid JSON");
      cfg = config_from_json(j, cfg);
    } else {
      validate(cfg);
    }
  } catch (const Error& e) {
    return error_reply(e);
  }

  EdgeListParse parsed;
  try {
    parsed = parse_edge_list(req.edges);
  } catch (const IngestError& e) {
    return reply(400, {{"error", to_string(e.kind())},
                       {"message", e.what()},
                       {"bad_line_count", e.issues().size()},
                       {"bad_lines", lines_json(e.issues())}});
  } catch (const Error& e) {
    return error_reply(e);
  }

  MetadataParse meta;
  if (req.metadata) meta = parse_metadata(*req.metadata);

  auto job = std::make_shared<Job>();
  try {
    BuildReport report;
    auto net = std::make_shared<TemporalNetwork>(build_network(parsed.edges, meta.labels, &report));
    std::thread([job, net, cfg, report] {
      std::optional<AnalysisResult> result;
      std::exception_ptr error;
      try {
        result = run_analysis(*net, cfg, &job->control, report);
      } catch (...) {
        error = std::current_exception();
      }
      std::lock_guard lock(job->mutex);
      job->result = std::move(result);
      job->error = error;
      job->done = true;
      job->done_cv.notify_all();
    }).detach();
  } catch (const Error& e) {
    return error_reply(e);
  }

  std::unique_lock lock(job->mutex);
  if (!job->done_cv.wait_for(lock, options_.timeout, [&] { return job->done; })) {
    job->control.cancel = true;
    const auto stage = static_cast<Stage>(job->control.stage.load());
    return reply(503, {{"error", "Timeout"},
                       {"message", "analysis exceeded the time limit"},
                       {"timeout_ms", options_.timeout.count()},
                       {"stage", to_string(stage)}});
  }
  if (job->error) {
    try {
      std::rethrow_exception(job->error);
    } catch (const Error& e) {
      return error_reply(e);
    } catch (const std::exception& e) {
      return error_reply(500, "Internal", e.what());
    }
  }

  auto result = std::make_shared<const AnalysisResult>(std::move(*job->result));
  const std::string id = store_->insert(result);
  return reply(201, {{"id", id},
                     {"summary", summary_json(result->summary)},
                     {"input_summary", summary_json(result->input_summary)},
                     {"suggestion", suggestion_json(result->suggestion)},
                     {"mean_modularity", rounded(result->mean_modularity, 6)},
                     {"slice_count", result->slicing.slices.size()},
                     {"slices_clamped", result->slicing.clamped},
                     {"community_count", result->communities.size()},
                     {"warnings",
                      {{"edge_line_count", parsed.issues.size()},
                       {"edge_lines", lines_json(parsed.issues)},
                       {"metadata_lines", lines_json(meta.issues)},
                       {"self_loops_dropped", result->build_report.self_loops_dropped},
                       {"duplicates_collapsed", result->build_report.duplicates_collapsed},
                       {"dropped_metadata_keys", result->build_report.dropped_metadata_keys}}}});
}

ApiResponse Api::get(const std::string& path,
                     const std::map<std::string, std::string>& query) const {
  const auto parts = split_path(path);
  if (parts.empty()) return error_reply(404, "NotFound", "no such route");
  auto result = store_->get(parts[0]);
  if (!result) return error_reply(404, "NotFound", "unknown analysis id '" + parts[0] + "'");
  const AnalysisResult& r = *result;

  try {
    if (parts.size() == 1) return reply(200, analysis_json(r));
    const std::string& what = parts[1];
    if (what == "matrix" && parts.size() == 2) {
      auto lookup = [&](const char* name) -> std::optional<Taxonomy> {
        auto it = query.find(name);
        if (it == query.end()) return std::nullopt;
        return parse_taxonomy(it->second);
      };
      const auto x = lookup("x");
      const auto y = lookup("y");
      if (!x || !y)
        return error_reply(422, "UnknownTaxonomy",
                           "x and y must each be one of Structural, Temporal, Evolution");
      return reply(200, matrix_json(taxonomy_matrix(r.communities, *x, *y)));
    }
    if (what == "globalview" && parts.size() == 2) return reply(200, globalview_json(r));
    if ((what == "community" && parts.size() == 4) || (what == "node" && parts.size() >= 5)) {
      const auto slice = to_int(parts[2]);
      const auto local = to_int(parts[3]);
      if (!slice || !local) return error_reply(404, "NotFound", "malformed community key");
      const CommunityKey key{*slice, *local};
      if (what == "community") return reply(200, community_view_json(r, key));
      std::string node = parts[4];
      for (std::size_t i = 5; i < parts.size(); ++i) node += "/" + parts[i];
      return reply(200, node_json(r, key, node));
    }
  } catch (const Error& e) {
    return error_reply(e);
  }
  return error_reply(404, "NotFound", "no such route");
}

void mount(httplib::Server& http, const Api& api) {
  const std::string origin = api.options().cors_origin;
  http.set_default_headers({{"Access-Control-Allow-Origin", origin},
                            {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                            {"Access-Control-Allow-Headers", "Content-Type"}});
  http.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });

  http.Post("/api/network", [&api](const httplib::Request& req, httplib::Response& res) {
    ApiResponse out;
    if (!req.is_multipart_form_data() || !req.has_file("edges")) {
      out = error_reply(400, "NoValidEdges", "expected multipart form with an 'edges' file");
    } else {
      UploadRequest up;
      up.edges = req.get_file_value("edges").content;
      if (req.has_file("metadata")) up.metadata = req.get_file_value("metadata").content;
      if (req.has_file("config")) up.config = req.get_file_value("config").content;
      out = api.upload(up);
    }
    res.status = out.status;
    res.set_content(out.body, "application/json");
  });

  http.Get(R"(/api/(.+))", [&api](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    const ApiResponse out = api.get(req.matches[1].str(), query);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  });

  http.set_exception_handler([](const httplib::Request&, httplib::Response& res,
                                std::exception_ptr ep) {
    std::string message = "unknown error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    const ApiResponse out = error_reply(500, "Internal", message);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  });
}

int port_from_env(int fallback) {
  const char* env = std::getenv("TEMPOCOM_PORT");
  if (!env) return fallback;
  const auto port = to_int(env);
  return port && *port > 0 && *port < 65536 ? *port : fallback;
}

bool serve(const Api& api, const std::string& host, int port) {
  httplib::Server http;
  mount(http, api);
  return http.listen(host, port);
}

}  // namespace tempocom
