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

#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

#include "tempocom/analysis.hpp"

namespace httplib {
class Server;
}

namespace tempocom {

/// In-memory map of immutable analyses. Ids are "a1", "a2", ...
class AnalysisStore {
 public:
  std::string insert(std::shared_ptr<const AnalysisResult> result);
  std::shared_ptr<const AnalysisResult> get(const std::string& id) const;
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<const AnalysisResult>> items_;
  std::size_t next_ = 1;
};

struct ApiResponse {
  int status = 200;
  std::string body;
};

struct UploadRequest {
  std::string edges;
  std::optional<std::string> metadata;
  std::optional<std::string> config;  ///< JSON object, see config_from_json
};

struct ServerOptions {
  AnalysisConfig defaults;
  std::chrono::milliseconds timeout{120'000};
  std::string cors_origin = "*";
};

/// Request handlers independent of the transport. Every body is JSON.
class Api {
 public:
  explicit Api(std::shared_ptr<AnalysisStore> store, ServerOptions options = {});

  /// Parses, analyzes and stores. 201 with id, summary, suggestion and mean
  /// modularity; 400 with line diagnostics; 422 for a bad config; 503 when the
  /// pipeline exceeds the timeout.
  ApiResponse upload(const UploadRequest& req) const;

  /// `path` starts after "/api/", e.g. "a1/matrix". 404 for unknown ids or
  /// routes, 422 for unknown taxonomy names.
  ApiResponse get(const std::string& path, const std::map<std::string, std::string>& query) const;

  AnalysisStore& store() const { return *store_; }
  const ServerOptions& options() const { return options_; }

 private:
  std::shared_ptr<AnalysisStore> store_;
  ServerOptions options_;
};

/// Registers the API routes (and CORS handling) on an httplib server.
void mount(httplib::Server& http, const Api& api);

/// Port from TEMPOCOM_PORT, else `fallback`.
int port_from_env(int fallback = 8080);

/// Blocks serving on host:port. Returns false if binding fails.
bool serve(const Api& api, const std::string& host, int port);

}  // namespace tempocom
