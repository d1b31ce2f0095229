// Copyright 2026 The Schemagate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schemagate/gateway/server.hpp"

#include <fstream>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "schemagate/analytics/intersections.hpp"
#include "schemagate/embed/emb_io.hpp"
#include "schemagate/gateway/sparql_subset.hpp"
#include "schemagate/rdf/parser.hpp"

namespace schemagate::gateway {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kJson = "application/json";

void SendError(httplib::Response& res, int status, const std::string& code,
               const std::string& message, const json& detail = nullptr) {
  res.status = status;
  json body = {{"error", {{"code", code}, {"message", message}, {"detail", detail}}}};
  res.set_content(body.dump(), kJson);
}

void SendJson(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

int StatusFor(const std::string& code) {
  if (code == "not_found") return 404;
  if (code == "conflict" || code == "invalid_state") return 409;
  if (code == "validation_failed" || code == "license_denied") return 422;
  if (code == "io_error") return 500;
  return 400;
}

json ParseBody(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("request body is not JSON: ") + e.what());
  }
}

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string ContentType(const std::string& format) {
  if (format == "vis") return kJson;
  if (format == "csv" || format == "cue") return "text/csv";
  if (format == "ttl") return "text/turtle";
  if (format == "rdf") return "application/n-triples";
  return "text/plain";
}

catalog::DistributionDraft DraftFromJson(const json& doc) {
  catalog::DistributionDraft draft;
  draft.meta = catalog::Distribution::FromJson(doc);
  if (auto it = doc.find("content"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) throw std::invalid_argument("content must be a string");
    draft.payload = it->get<std::string>();
  }
  return draft;
}

}  // namespace

struct ApiServer::Impl {
  Impl(catalog::Catalog& c, ServerOptions o)
      : catalog(c), options(std::move(o)), jobs(c, options.workers) {
    Routes();
  }

  catalog::Catalog& catalog;
  ServerOptions options;
  JobQueue jobs;
  httplib::Server server;
  std::thread thread;

  bool Authorized(const httplib::Request& req) const {
    if (options.token.empty()) return false;
    return req.get_header_value("Authorization") == "Bearer " + options.token;
  }

  // Runs `body`, translating exceptions into error responses. Mutating
  // handlers check the token first so rejected calls touch nothing.
  template <typename F>
  httplib::Server::Handler Wrap(bool mutating, F body) {
    return [this, mutating, body](const httplib::Request& req, httplib::Response& res) {
      if (mutating && !Authorized(req)) {
        SendError(res, 401, "unauthorized", "a valid admin bearer token is required");
        return;
      }
      try {
        body(req, res);
      } catch (const catalog::ValidationFailed& e) {
        SendError(res, 422, e.code(), e.what(), e.result().ToJson());
      } catch (const catalog::CatalogError& e) {
        SendError(res, StatusFor(e.code()), e.code(), e.what());
      } catch (const UnsupportedFeature& e) {
        SendError(res, 400, "unsupported_feature", e.what(), {{"feature", e.feature()}});
      } catch (const rdf::ParseError& e) {
        SendError(res, 422, "parse_error", e.what(),
                  {{"line", e.line()}, {"column", e.column()}});
      } catch (const std::invalid_argument& e) {
        SendError(res, 400, "invalid_argument", e.what());
      } catch (const std::exception& e) {
        SendError(res, 500, "internal", e.what());
      }
    };
  }

  catalog::DatasetRecord MustFind(const std::string& name) const {
    auto record = catalog.Find(name);
    if (!record) throw catalog::CatalogError("not_found", "no dataset '" + name + "'");
    return *record;
  }

  void Routes() {
    const std::string api = "/api/v1";

    server.Get(api + "/datasets", Wrap(false, [this](const auto& req, auto& res) {
      catalog::SearchQuery query;
      query.text = req.get_param_value("q");
      std::string fuzzy = req.get_param_value("fuzzy");
      query.fuzzy = fuzzy == "1" || fuzzy == "true" || fuzzy == "on";
      query.category = req.get_param_value("category");
      query.publisher = req.get_param_value("publisher");
      std::string state = req.has_param("state") ? req.get_param_value("state")
                                                 : "published";
      std::vector<catalog::DatasetRecord> pool;
      for (auto& r : catalog.Datasets()) {
        if (state == "any" || catalog::StateName(r.state) == state) {
          pool.push_back(std::move(r));
        }
      }
      if (state != "any") catalog::StateFromName(state);
      std::map<std::string, const catalog::DatasetRecord*> by_name;
      for (const auto& r : pool) by_name[r.name] = &r;
      json results = json::array();
      for (const auto& hit : catalog::SearchRecords(pool, query)) {
        json doc = by_name[hit.name]->ToJson();
        doc["match"] = {{"exact", hit.exact}, {"fuzzy", hit.fuzzy}};
        results.push_back(std::move(doc));
      }
      SendJson(res, 200, {{"count", results.size()}, {"results", results}});
    }));

    server.Get(api + R"(/datasets/([^/]+))", Wrap(false, [this](const auto& req, auto& res) {
      SendJson(res, 200, MustFind(req.matches[1]).ToJson());
    }));

    server.Post(api + "/datasets", Wrap(true, [this](const auto& req, auto& res) {
      json body = ParseBody(req);
      catalog::DatasetRecord record = catalog::DatasetRecord::FromJson(body);
      std::vector<catalog::DistributionDraft> drafts;
      if (auto it = body.find("distributions"); it != body.end() && it->is_array()) {
        for (const auto& d : *it) drafts.push_back(DraftFromJson(d));
      }
      bool creating = record.id.empty();
      catalog::DatasetRecord stored =
          catalog.UpsertDataset(std::move(record), std::move(drafts), "admin");
      SendJson(res, creating ? 201 : 200, stored.ToJson());
    }));

    server.Post(api + R"(/datasets/([^/]+)/distributions)",
                Wrap(true, [this](const auto& req, auto& res) {
                  catalog::Distribution d = catalog.AddDistribution(
                      req.matches[1], DraftFromJson(ParseBody(req)), "admin");
                  SendJson(res, 201, d.ToJson());
                }));

    server.Get(api + R"(/datasets/([^/]+)/distributions/([^/]+))",
               Wrap(false, [this](const auto& req, auto& res) {
                 catalog::DatasetRecord record = MustFind(req.matches[1]);
                 std::string id = req.matches[2];
                 for (const auto& d : record.distributions) {
                   if (d.id != id) continue;
                   fs::path path = catalog.PayloadPath(d);
                   if (d.access_url.empty() || !fs::exists(path)) {
                     throw catalog::CatalogError("not_found",
                                                 "distribution '" + id + "' has no stored payload");
                   }
                   if (fs::is_directory(path)) {
                     embed::LoadedModel model = embed::ImportModel(path);
                     SendJson(res, 200, {{"config", model.config},
                                         {"metrics", model.metrics},
                                         {"entities", model.entities.size()},
                                         {"relations", model.relations.size()}});
                   } else {
                     res.status = 200;
                     res.set_content(ReadAll(path), ContentType(d.format));
                   }
                   return;
                 }
                 throw catalog::CatalogError("not_found", "no distribution '" + id + "'");
               }));

    server.Post(api + R"(/datasets/([^/]+)/review)",
                Wrap(true, [this](const auto& req, auto& res) {
                  json body = ParseBody(req);
                  std::string decision = body.value("decision", "");
                  catalog::Decision d;
                  if (decision == "approve") {
                    d = catalog::Decision::kApprove;
                  } else if (decision == "reject") {
                    d = catalog::Decision::kReject;
                  } else {
                    throw std::invalid_argument("decision must be approve or reject");
                  }
                  SendJson(res, 200, catalog.Review(req.matches[1], d, "admin").ToJson());
                }));

    server.Post(api + R"(/datasets/([^/]+)/jobs)", Wrap(true, [this](const auto& req, auto& res) {
      json body = ParseBody(req);
      if (!body.is_object() || !body.contains("kind") || !body["kind"].is_string()) {
        throw std::invalid_argument("job request needs a string 'kind'");
      }
      pipeline::JobKind kind = pipeline::KindFromName(body["kind"].get<std::string>());
      json params = body.value("params", json::object());
      std::string id = jobs.Submit(req.matches[1], kind, params, "admin");
      json doc = jobs.Get(id)->ToJson();
      res.set_header("Location", "/api/v1/jobs/" + id);
      SendJson(res, 202, doc);
    }));

    server.Get(api + R"(/jobs/([^/]+))", Wrap(false, [this](const auto& req, auto& res) {
      auto job = jobs.Get(req.matches[1]);
      if (!job) {
        throw catalog::CatalogError("not_found",
                                    "no job '" + std::string(req.matches[1]) + "'");
      }
      SendJson(res, 200, job->ToJson());
    }));

    server.Post(api + R"(/datasets/([^/]+)/query)", Wrap(false, [this](const auto& req, auto& res) {
      json body = ParseBody(req);
      if (!body.is_object() || !body.contains("query") || !body["query"].is_string()) {
        throw std::invalid_argument("query request needs a string 'query'");
      }
      catalog::DatasetRecord record = MustFind(req.matches[1]);
      rdf::Graph graph = DatasetGraph(catalog, record);
      SendJson(res, 200, RunQuery(graph, body["query"].get<std::string>()).ToJson());
    }));

    server.Get(api + "/activity", Wrap(false, [this](const auto& req, auto& res) {
      std::optional<std::string> since, dataset;
      if (req.has_param("since")) since = req.get_param_value("since");
      if (req.has_param("dataset")) dataset = req.get_param_value("dataset");
      json events = json::array();
      for (const auto& e : catalog.Activity(since, dataset)) events.push_back(e.ToJson());
      SendJson(res, 200, {{"count", events.size()}, {"events", events}});
    }));

    server.Get(api + "/providers", Wrap(false, [this](const auto&, auto& res) {
      json items = json::array();
      for (const auto& p : catalog.Providers()) items.push_back(p.ToJson());
      SendJson(res, 200, {{"count", items.size()}, {"results", items}});
    }));

    server.Get(api + "/catalogs", Wrap(false, [this](const auto&, auto& res) {
      json items = json::array();
      for (const auto& c : catalog.SourceCatalogs()) items.push_back(c.ToJson());
      SendJson(res, 200, {{"count", items.size()}, {"results", items}});
    }));

    server.Get(api + "/formats", Wrap(false, [](const auto&, auto& res) {
      SendJson(res, 200, {{"formats", catalog::DistributionFormats()}});
    }));

    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (!res.body.empty()) return;
      SendError(res, res.status, res.status == 404 ? "not_found" : "http_error",
                "no such endpoint or method");
    });
  }
};

ApiServer::ApiServer(catalog::Catalog& catalog, ServerOptions options)
    : impl_(std::make_unique<Impl>(catalog, std::move(options))) {}

ApiServer::~ApiServer() { Stop(); }

int ApiServer::Start(const std::string& host, int port) {
  int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                        : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) return -1;
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

void ApiServer::Wait() {
  if (impl_->thread.joinable()) impl_->thread.join();
}

void ApiServer::Stop() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

JobQueue& ApiServer::jobs() { return impl_->jobs; }

}  // namespace schemagate::gateway
