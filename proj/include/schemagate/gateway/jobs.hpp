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

#ifndef SCHEMAGATE_GATEWAY_JOBS_HPP_
#define SCHEMAGATE_GATEWAY_JOBS_HPP_

#include <chrono>
#include <condition_variable>
#include <deque>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"
#include "schemagate/catalog/catalog.hpp"
#include "schemagate/pipeline/pipeline.hpp"
#include "schemagate/rdf/term.hpp"

namespace schemagate::gateway {

enum class JobStatus { kQueued, kRunning, kDone, kFailed };

std::string_view StatusName(JobStatus status);

struct Job {
  std::string id;
  std::string dataset;
  pipeline::JobParams params;
  JobStatus status = JobStatus::kQueued;
  std::string result;  // id of the attached distribution when done
  std::string diagnostics;
  std::string submitted;
  std::string started;
  std::string finished;
  nlohmann::json summary;  // kind-specific: train report, matrix shape, ...

  bool terminal() const {
    return status == JobStatus::kDone || status == JobStatus::kFailed;
  }
  nlohmann::json ToJson() const;
};

// The parsed graph of a dataset, read from its N-Triples ("rdf") or Turtle
// distribution. Throws catalog::CatalogError(invalid_state) when neither
// exists.
rdf::Graph DatasetGraph(const catalog::Catalog& catalog,
                        const catalog::DatasetRecord& record);

// FIFO queue drained by a fixed pool of workers. Each finished job attaches
// its artifact to the dataset as a new distribution.
class JobQueue {
 public:
  JobQueue(catalog::Catalog& catalog, std::size_t workers = 2);
  ~JobQueue();

  JobQueue(const JobQueue&) = delete;
  JobQueue& operator=(const JobQueue&) = delete;

  // Throws catalog::CatalogError (not_found, invalid_state) when the
  // dataset is missing or unpublished and std::invalid_argument on bad
  // parameters.
  std::string Submit(const std::string& dataset, pipeline::JobKind kind,
                     const nlohmann::json& params, const std::string& actor);

  std::optional<Job> Get(const std::string& id) const;
  std::vector<Job> List() const;
  // Blocks until the job is terminal or the timeout passes.
  std::optional<Job> Wait(const std::string& id,
                          std::chrono::milliseconds timeout) const;

 private:
  void Work();
  void Execute(const std::string& id);

  catalog::Catalog& catalog_;
  mutable std::mutex mutex_;
  mutable std::condition_variable changed_;
  std::map<std::string, Job> jobs_;
  std::map<std::string, std::string> actors_;
  std::deque<std::string> queue_;
  std::uint64_t next_ = 1;
  bool stopping_ = false;
  std::vector<std::thread> workers_;
};

}  // namespace schemagate::gateway

#endif  // SCHEMAGATE_GATEWAY_JOBS_HPP_
