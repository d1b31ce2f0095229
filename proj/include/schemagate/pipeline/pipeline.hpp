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

#ifndef SCHEMAGATE_PIPELINE_PIPELINE_HPP_
#define SCHEMAGATE_PIPELINE_PIPELINE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "schemagate/embed/model.hpp"
#include "schemagate/embed/trainer.hpp"
#include "schemagate/rdf/term.hpp"
#include "schemagate/schema/formal_context.hpp"
#include "schemagate/schema/schema_model.hpp"

namespace schemagate::pipeline {

// Derived artifacts shared by the command line and the job queue, so both
// produce identical bytes for identical parameters.

enum class JobKind { kFca, kCue, kVis, kEmb };

std::string_view KindName(JobKind kind);
JobKind KindFromName(std::string_view name);
// Distribution format recorded for a job kind's result.
std::string_view KindFormat(JobKind kind);

struct JobParams {
  JobKind kind = JobKind::kFca;
  std::optional<schema::PredicateFilter> filter;
  bool inherit = false;
  schema::ContextFormat fca_format = schema::ContextFormat::kCxt;
  std::vector<std::string> select;  // vis: etype IRIs or prefixed names
  bool upset = false;               // vis: UpSet even for <= 6 sets
  embed::TrainConfig train;         // emb

  // Keys per kind (all optional unless noted):
  //   fca: filter, filter_mode, inherit, format (cxt|csv)
  //   cue: filter, filter_mode, inherit
  //   vis: select (required, >= 2), upset, filter, filter_mode, inherit
  //   emb: model, loss, margin, dim, epochs, lr, neg, seed, holdout,
  //        eval_limit, drop_literals
  // "filter" is a list (or comma-separated string) of predicate IRIs or
  // prefixed names; filter_mode is include or exclude (default). Unknown
  // keys and invalid values throw std::invalid_argument.
  static JobParams FromJson(JobKind kind, const nlohmann::json& params);
  nlohmann::json ToJson() const;
};

// Reads Turtle, or N-Triples for a ".nt" extension.
rdf::Graph LoadGraph(const std::filesystem::path& path);

schema::PredicateFilter MakeFilter(const std::vector<std::string>& predicates,
                                   std::string_view mode);

schema::FormalContext BuildContext(const rdf::Graph& graph, const JobParams& params);

std::string FcaArtifact(const rdf::Graph& graph, const JobParams& params);
std::string CueArtifact(const rdf::Graph& graph, const JobParams& params);
// Throws analytics::SelectionError for fewer than two etypes.
std::string VisArtifact(const rdf::Graph& graph, const JobParams& params);
// Trains and writes the EMB directory; returns the report.
embed::TrainReport EmbArtifact(const rdf::Graph& graph, const JobParams& params,
                               const std::filesystem::path& dir);

// File extension (without dot) for a kind's artifact.
std::string ArtifactExtension(const JobParams& params);

}  // namespace schemagate::pipeline

#endif  // SCHEMAGATE_PIPELINE_PIPELINE_HPP_
