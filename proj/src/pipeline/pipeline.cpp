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

#include "schemagate/pipeline/pipeline.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "schemagate/analytics/cues.hpp"
#include "schemagate/analytics/intersections.hpp"
#include "schemagate/embed/emb_io.hpp"
#include "schemagate/embed/index.hpp"
#include "schemagate/rdf/parser.hpp"

namespace schemagate::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view KindName(JobKind kind) {
  switch (kind) {
    case JobKind::kFca: return "fca";
    case JobKind::kCue: return "cue";
    case JobKind::kVis: return "vis";
    case JobKind::kEmb: return "emb";
  }
  return "fca";
}

JobKind KindFromName(std::string_view name) {
  if (name == "fca") return JobKind::kFca;
  if (name == "cue") return JobKind::kCue;
  if (name == "vis") return JobKind::kVis;
  if (name == "emb") return JobKind::kEmb;
  throw std::invalid_argument("unknown job kind '" + std::string(name) +
                              "' (expected fca, cue, vis or emb)");
}

std::string_view KindFormat(JobKind kind) { return KindName(kind); }

namespace {

std::vector<std::string> StringList(const json& value, const char* key) {
  std::vector<std::string> out;
  if (value.is_string()) {
    std::stringstream parts(value.get<std::string>());
    std::string part;
    while (std::getline(parts, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
    return out;
  }
  if (!value.is_array()) {
    throw std::invalid_argument(std::string(key) + " must be a list of strings");
  }
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw std::invalid_argument(std::string(key) + " must be a list of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

bool Bool(const json& value, const char* key) {
  if (!value.is_boolean()) throw std::invalid_argument(std::string(key) + " must be a boolean");
  return value.get<bool>();
}

std::string String(const json& value, const char* key) {
  if (!value.is_string()) throw std::invalid_argument(std::string(key) + " must be a string");
  return value.get<std::string>();
}

const std::set<std::string>& TrainKeys() {
  static const std::set<std::string> keys = {
      "model", "loss", "margin", "dim", "epochs", "lr",
      "neg", "seed", "holdout", "eval_limit", "drop_literals"};
  return keys;
}

}  // namespace

schema::PredicateFilter MakeFilter(const std::vector<std::string>& predicates,
                                   std::string_view mode) {
  schema::PredicateFilter filter;
  if (mode == "include") {
    filter.mode = schema::PredicateFilter::Mode::kInclude;
  } else if (mode == "exclude" || mode.empty()) {
    filter.mode = schema::PredicateFilter::Mode::kExclude;
  } else {
    throw std::invalid_argument("filter_mode must be include or exclude");
  }
  for (const auto& p : predicates) filter.predicates.insert(rdf::ExpandCurie(p, {}));
  filter.Validate();
  return filter;
}

JobParams JobParams::FromJson(JobKind kind, const json& params) {
  if (!params.is_null() && !params.is_object()) {
    throw std::invalid_argument("job parameters must be an object");
  }
  JobParams out;
  out.kind = kind;
  json train = json::object();
  std::vector<std::string> filter;
  std::string filter_mode;
  bool has_filter = false;
  if (params.is_object()) {
    for (const auto& [key, value] : params.items()) {
      bool schema_kind = kind != JobKind::kEmb;
      if (schema_kind && key == "filter") {
        filter = StringList(value, "filter");
        has_filter = true;
      } else if (schema_kind && key == "filter_mode") {
        filter_mode = String(value, "filter_mode");
      } else if (schema_kind && key == "inherit") {
        out.inherit = Bool(value, "inherit");
      } else if (kind == JobKind::kFca && key == "format") {
        out.fca_format = schema::ContextFormatFromName(String(value, "format"));
      } else if (kind == JobKind::kVis && key == "select") {
        out.select = StringList(value, "select");
      } else if (kind == JobKind::kVis && key == "upset") {
        out.upset = Bool(value, "upset");
      } else if (kind == JobKind::kEmb && TrainKeys().contains(key)) {
        train[key] = value;
      } else {
        throw std::invalid_argument("unknown parameter '" + key + "' for " +
                                    std::string(KindName(kind)) + " jobs");
      }
    }
  }
  if (has_filter || !filter_mode.empty()) out.filter = MakeFilter(filter, filter_mode);
  if (kind == JobKind::kVis && out.select.size() < 2) {
    throw analytics::SelectionError("need >= 2 etypes in select, got " +
                                    std::to_string(out.select.size()));
  }
  if (kind == JobKind::kEmb) out.train = embed::TrainConfig::FromJson(train);
  return out;
}

json JobParams::ToJson() const {
  if (kind == JobKind::kEmb) return train.ToJson();
  json doc = {{"inherit", inherit}};
  if (filter) {
    doc["filter"] = filter->predicates;
    doc["filter_mode"] =
        filter->mode == schema::PredicateFilter::Mode::kInclude ? "include" : "exclude";
  }
  if (kind == JobKind::kFca) {
    doc["format"] = fca_format == schema::ContextFormat::kCxt ? "cxt" : "csv";
  }
  if (kind == JobKind::kVis) {
    doc["select"] = select;
    doc["upset"] = upset;
  }
  return doc;
}

rdf::Graph LoadGraph(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  rdf::RdfFormat format = path.extension() == ".nt" ? rdf::RdfFormat::kNTriples
                                                    : rdf::RdfFormat::kTurtle;
  return rdf::ParseGraph(buf.str(), format);
}

schema::FormalContext BuildContext(const rdf::Graph& graph, const JobParams& params) {
  schema::SchemaModel model = schema::ExtractSchema(graph, params.filter);
  if (params.inherit) model = schema::InheritProperties(model);
  return schema::BuildFormalContext(model);
}

std::string FcaArtifact(const rdf::Graph& graph, const JobParams& params) {
  return schema::ExportContext(BuildContext(graph, params), params.fca_format);
}

std::string CueArtifact(const rdf::Graph& graph, const JobParams& params) {
  return analytics::ComputeCues(BuildContext(graph, params)).ToCsv();
}

std::string VisArtifact(const rdf::Graph& graph, const JobParams& params) {
  if (params.select.size() < 2) {
    throw analytics::SelectionError("need >= 2 etypes in select, got " +
                                    std::to_string(params.select.size()));
  }
  std::map<std::string, std::string> prefixes(graph.prefixes().begin(),
                                              graph.prefixes().end());
  std::vector<std::string> selected;
  for (const auto& s : params.select) selected.push_back(rdf::ExpandCurie(s, prefixes));
  analytics::IntersectionReport report =
      analytics::ExactIntersections(BuildContext(graph, params), selected);
  bool upset = params.upset || selected.size() > analytics::kMaxLotusSets;
  json doc = upset ? analytics::ExportUpset(report) : analytics::ExportLotus(report);
  return doc.dump(2) + "\n";
}

embed::TrainReport EmbArtifact(const rdf::Graph& graph, const JobParams& params,
                               const fs::path& dir) {
  embed::TripleIndex index = embed::BuildIndex(graph, params.train.drop_literals);
  embed::TrainResult result = embed::Train(index, params.train);
  embed::ExportModel(index, result.params, params.train, result.report, dir);
  return result.report;
}

std::string ArtifactExtension(const JobParams& params) {
  switch (params.kind) {
    case JobKind::kFca:
      return params.fca_format == schema::ContextFormat::kCxt ? "cxt" : "csv";
    case JobKind::kCue: return "cue.csv";
    case JobKind::kVis: return "vis.json";
    case JobKind::kEmb: return "emb";
  }
  return "bin";
}

}  // namespace schemagate::pipeline
