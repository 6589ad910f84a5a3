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

// Headless runner: ingest, analyze, export JSON, optionally serve.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tempocom/analysis.hpp"
#include "tempocom/error.hpp"
#include "tempocom/ingest.hpp"
#include "tempocom/serialize.hpp"
#include "tempocom/server.hpp"

namespace {

constexpr int kIngestFailure = 1;
constexpr int kBadFlags = 2;

struct Flags {
  std::string edges;
  std::optional<std::string> metadata;
  std::optional<std::string> out;
  int timeslices = 10;
  int min_community_size = 3;
  std::string sampling = "none";
  std::uint64_t seed = 42;
  double tau = 0.5;
  int threads = 0;
  std::string delimiter = "auto";
  bool header = false;
  bool serve = false;
  std::optional<int> port;
  bool suggest_only = false;
};

std::string slurp(const std::string& path) { return tempocom::read_file(path); }

}  // namespace

int main(int argc, char** argv) {
  using namespace tempocom;
  Flags f;
  CLI::App app{"Temporal network community analysis"};
  app.add_option("--edges", f.edges, "edge list: source target timestamp per line")->required();
  app.add_option("--metadata", f.metadata, "node category file: node category per line");
  app.add_option("--timeslices", f.timeslices, "number of uniform timeslices")
      ->capture_default_str();
  app.add_option("--min-community-size", f.min_community_size, "drop smaller communities")
      ->capture_default_str();
  app.add_option("--sampling", f.sampling, "none | node:F | edge:F | snowball[:SEEDS[:WAVES]]")
      ->capture_default_str();
  app.add_option("--seed", f.seed, "random seed")->capture_default_str();
  app.add_option("--tau", f.tau, "link similarity threshold in (0, 1]")->capture_default_str();
  app.add_option("--threads", f.threads, "worker threads, 0 = all cores")->capture_default_str();
  app.add_option("--delimiter", f.delimiter, "auto | whitespace | comma | tab")
      ->check(CLI::IsMember({"auto", "whitespace", "comma", "tab"}))
      ->capture_default_str();
  app.add_flag("--header", f.header, "first data line is a header");
  app.add_option("--out", f.out, "write the JSON export here instead of stdout");
  app.add_flag("--serve", f.serve, "start the HTTP API preloaded with the result");
  app.add_option("--port", f.port, "port for --serve (default TEMPOCOM_PORT or 8080)");
  app.add_flag("--suggest-only", f.suggest_only, "print min default max slice counts and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadFlags;
  }

  AnalysisConfig cfg;
  cfg.slice_count = f.timeslices;
  cfg.min_community_size = f.min_community_size;
  cfg.seed = f.seed;
  cfg.tau = f.tau;
  cfg.threads = f.threads;
  try {
    cfg.sampling = parse_sampling(f.sampling);
    validate(cfg);
  } catch (const Error& e) {
    std::cerr << "tempocom: " << e.what() << "\n";
    return kBadFlags;
  }

  IngestOptions ingest;
  ingest.has_header = f.header;
  static const std::map<std::string, Delimiter> kDelimiters = {
      {"auto", Delimiter::kAuto},
      {"whitespace", Delimiter::kWhitespace},
      {"comma", Delimiter::kComma},
      {"tab", Delimiter::kTab}};
  ingest.delimiter = kDelimiters.at(f.delimiter);

  const auto start = std::chrono::steady_clock::now();
  std::optional<TemporalNetwork> net;
  BuildReport report;
  try {
    const EdgeListParse parsed = parse_edge_list(slurp(f.edges), ingest);
    for (const auto& issue : parsed.issues)
      std::cerr << "tempocom: " << f.edges << ":" << issue.line << ": " << issue.message << "\n";
    Metadata labels;
    if (f.metadata) {
      MetadataParse meta = parse_metadata(slurp(*f.metadata));
      for (const auto& issue : meta.issues)
        std::cerr << "tempocom: " << *f.metadata << ":" << issue.line << ": " << issue.message
                  << "\n";
      labels = std::move(meta.labels);
    }
    net = build_network(parsed.edges, labels, &report);
  } catch (const Error& e) {
    std::cerr << "tempocom: " << e.what() << "\n";
    return kIngestFailure;
  }

  if (f.suggest_only) {
    const SliceSuggestion s = suggest_slice_counts(*net);
    std::cout << s.min_count << " " << s.default_count << " " << s.max_count << "\n";
    return 0;
  }

  std::shared_ptr<const AnalysisResult> result;
  try {
    result = std::make_shared<const AnalysisResult>(run_analysis(*net, cfg, nullptr, report));
  } catch (const Error& e) {
    std::cerr << "tempocom: " << e.what() << "\n";
    return e.kind() == ErrorKind::kInvalidConfig || e.kind() == ErrorKind::kInvalidSliceCount
               ? kBadFlags
               : kIngestFailure;
  }

  const std::string body = export_json(*result).dump() + "\n";
  if (f.out) {
    std::ofstream os(*f.out, std::ios::binary);
    os << body;
    if (!os) {
      std::cerr << "tempocom: cannot write " << *f.out << "\n";
      return kIngestFailure;
    }
  } else {
    std::cout << body;
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::FILE* summary_stream = f.out ? stdout : stderr;
  std::fprintf(summary_stream, "communities=%zu slices=%zu mean_modularity=%.4f wall_time=%.2fs\n",
               result->communities.size(), result->slicing.slices.size(),
               result->mean_modularity, wall);
  std::fflush(summary_stream);

  if (f.serve) {
    auto store = std::make_shared<AnalysisStore>();
    const std::string id = store->insert(result);
    ServerOptions options;
    options.defaults = cfg;
    Api api(store, options);
    const int port = f.port ? *f.port : port_from_env();
    std::fprintf(summary_stream, "serving analysis %s on http://0.0.0.0:%d/api/%s\n", id.c_str(),
                 port, id.c_str());
    std::fflush(summary_stream);
    if (!serve(api, "0.0.0.0", port)) {
      std::cerr << "tempocom: cannot listen on port " << port << "\n";
      return kIngestFailure;
    }
  }
  return 0;
}
