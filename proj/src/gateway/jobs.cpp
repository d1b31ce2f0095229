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

#include "schemagate/gateway/jobs.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "schemagate/embed/emb_io.hpp"
#include "schemagate/rdf/parser.hpp"

namespace schemagate::gateway {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view StatusName(JobStatus status) {
  switch (status) {
    case JobStatus::kQueued: return "queued";
    case JobStatus::kRunning: return "running";
    case JobStatus::kDone: return "done";
    case JobStatus::kFailed: return "failed";
  }
  return "queued";
}

json Job::ToJson() const {
  json doc = {{"id", id},
              {"dataset", dataset},
              {"kind", pipeline::KindName(params.kind)},
              {"params", params.ToJson()},
              {"status", StatusName(status)},
              {"submitted", submitted}};
  doc["result"] = result.empty() ? json(nullptr) : json(result);
  if (!started.empty()) doc["started"] = started;
  if (!finished.empty()) doc["finished"] = finished;
  if (!diagnostics.empty()) doc["diagnostics"] = diagnostics;
  if (!summary.is_null()) doc["summary"] = summary;
  return doc;
}

rdf::Graph DatasetGraph(const catalog::Catalog& catalog,
                        const catalog::DatasetRecord& record) {
  for (const char* format : {"rdf", "ttl"}) {
    for (const auto& d : record.distributions) {
      if (d.format != format || d.access_url.empty()) continue;
      fs::path path = catalog.PayloadPath(d);
      if (!fs::is_regular_file(path)) continue;
      std::ifstream in(path, std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      return rdf::ParseGraph(buf.str(), d.format == "rdf" ? rdf::RdfFormat::kNTriples
                                                          : rdf::RdfFormat::kTurtle);
    }
  }
  throw catalog::CatalogError("invalid_state", "dataset '" + record.name +
                                                   "' has no stored RDF distribution");
}

JobQueue::JobQueue(catalog::Catalog& catalog, std::size_t workers) : catalog_(catalog) {
  if (workers == 0) workers = 1;
  for (std::size_t i = 0; i < workers; ++i) workers_.emplace_back([this] { Work(); });
}

JobQueue::~JobQueue() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  changed_.notify_all();
  for (auto& t : workers_) t.join();
}

std::string JobQueue::Submit(const std::string& dataset, pipeline::JobKind kind,
                             const json& params, const std::string& actor) {
  auto record = catalog_.Find(dataset);
  if (!record) throw catalog::CatalogError("not_found", "no dataset '" + dataset + "'");
  if (record->state != catalog::DatasetState::kPublished) {
    throw catalog::CatalogError("invalid_state",
                                "dataset '" + dataset + "' is not published");
  }
  pipeline::JobParams parsed = pipeline::JobParams::FromJson(kind, params);
  std::string id;
  {
    std::lock_guard lock(mutex_);
    char buf[32];
    std::snprintf(buf, sizeof buf, "job-%06llu", static_cast<unsigned long long>(next_++));
    id = buf;
    Job job;
    job.id = id;
    job.dataset = dataset;
    job.params = std::move(parsed);
    job.submitted = catalog::NowTimestamp();
    jobs_[id] = std::move(job);
    actors_[id] = actor;
    queue_.push_back(id);
  }
  changed_.notify_all();
  return id;
}

std::optional<Job> JobQueue::Get(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return std::nullopt;
  return it->second;
}

std::vector<Job> JobQueue::List() const {
  std::lock_guard lock(mutex_);
  std::vector<Job> out;
  for (const auto& [id, job] : jobs_) out.push_back(job);
  return out;
}

std::optional<Job> JobQueue::Wait(const std::string& id,
                                  std::chrono::milliseconds timeout) const {
  std::unique_lock lock(mutex_);
  changed_.wait_for(lock, timeout, [&] {
    auto it = jobs_.find(id);
    return it == jobs_.end() || it->second.terminal();
  });
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return std::nullopt;
  return it->second;
}

void JobQueue::Work() {
  for (;;) {
    std::string id;
    {
      std::unique_lock lock(mutex_);
      changed_.wait(lock, [&] { return stopping_ || !queue_.empty(); });
      if (stopping_) return;
      id = queue_.front();
      queue_.pop_front();
      Job& job = jobs_[id];
      job.status = JobStatus::kRunning;
      job.started = catalog::NowTimestamp();
    }
    changed_.notify_all();
    Execute(id);
    changed_.notify_all();
  }
}

void JobQueue::Execute(const std::string& id) {
  Job job;
  std::string actor;
  {
    std::lock_guard lock(mutex_);
    job = jobs_[id];
    actor = actors_[id];
  }
  const pipeline::JobParams& params = job.params;
  std::string result;
  json summary;
  std::string error;
  fs::path scratch;
  try {
    auto record = catalog_.Find(job.dataset);
    if (!record) throw catalog::CatalogError("not_found", "dataset disappeared");
    rdf::Graph graph = DatasetGraph(catalog_, *record);

    catalog::DistributionDraft draft;
    draft.meta.format = std::string(pipeline::KindFormat(params.kind));
    draft.meta.description = std::string(pipeline::KindName(params.kind)) +
                             " artifact from job " + id + " with parameters " +
                             params.ToJson().dump();
    draft.extension = pipeline::ArtifactExtension(params);
    switch (params.kind) {
      case pipeline::JobKind::kFca: {
        draft.meta.title = "FCA context";
        draft.payload = pipeline::FcaArtifact(graph, params);
        schema::FormalContext ctx = pipeline::BuildContext(graph, params);
        summary = {{"objects", ctx.rows()}, {"attributes", ctx.cols()}};
        break;
      }
      case pipeline::JobKind::kCue:
        draft.meta.title = "Cue metrics";
        draft.payload = pipeline::CueArtifact(graph, params);
        break;
      case pipeline::JobKind::kVis:
        draft.meta.title = "Intersections";
        draft.payload = pipeline::VisArtifact(graph, params);
        break;
      case pipeline::JobKind::kEmb: {
        draft.meta.title = "Knowledge embedding";
        scratch = fs::temp_directory_path() /
                  ("schemagate-" + id + "-" + std::to_string(std::hash<std::string>{}(
                                                  catalog_.root().string())));
        fs::remove_all(scratch);
        embed::TrainReport report = pipeline::EmbArtifact(graph, params, scratch);
        summary = report.ToJson();
        draft.payload_dir = scratch;
        break;
      }
    }
    result = catalog_.AddDistribution(job.dataset, std::move(draft), actor).id;
  } catch (const std::exception& e) {
    error = e.what();
  }
  if (!scratch.empty()) {
    std::error_code ec;
    fs::remove_all(scratch, ec);
  }
  std::lock_guard lock(mutex_);
  Job& stored = jobs_[id];
  stored.finished = catalog::NowTimestamp();
  stored.summary = summary;
  if (error.empty()) {
    stored.status = JobStatus::kDone;
    stored.result = result;
  } else {
    stored.status = JobStatus::kFailed;
    stored.diagnostics = error;
  }
}

}  // namespace schemagate::gateway
