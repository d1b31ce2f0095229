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

// Command-line front end: every pipeline stage, offline.

#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schemagate/catalog/catalog.hpp"
#include "schemagate/embed/emb_io.hpp"
#include "schemagate/gateway/server.hpp"
#include "schemagate/gateway/sparql_subset.hpp"
#include "schemagate/harvest/harvester.hpp"
#include "schemagate/pipeline/pipeline.hpp"
#include "schemagate/rdf/parser.hpp"
#include "schemagate/rdf/serializer.hpp"
#include "schemagate/rdf/table.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace schemagate;

namespace {

void Emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) {
    throw std::runtime_error("cannot write " + output);
  }
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string Extension(const std::string& path) {
  std::string name = fs::path(path).filename().string();
  auto dot = name.find('.');
  return dot == std::string::npos ? "" : name.substr(dot + 1);
}

// Shared --filter/--filter-mode/--inherit flags of the schema commands.
struct SchemaFlags {
  std::vector<std::string> filter;
  std::string filter_mode;
  bool inherit = false;

  void Attach(CLI::App* app) {
    app->add_option("--filter", filter,
                    "schema-bearing predicates to exclude (or include, see "
                    "--filter-mode)")
        ->delimiter(',');
    app->add_option("--filter-mode", filter_mode, "include or exclude (default)")
        ->check(CLI::IsMember({"include", "exclude"}));
    app->add_flag("--inherit", inherit, "propagate properties to subclasses");
  }

  json Params() const {
    json p = {{"inherit", inherit}};
    if (!filter.empty()) p["filter"] = filter;
    if (!filter_mode.empty()) p["filter_mode"] = filter_mode;
    return p;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"schemagate: vocabulary catalog, FCA, cue analysis and embeddings"};
  app.require_subcommand(1);

  std::string input;
  std::string output;

  auto* parse = app.add_subcommand("parse", "re-serialize an RDF file (nt, ttl or csv)");
  std::string parse_to;
  parse->add_option("file", input, "Turtle or N-Triples input")->required();
  parse->add_option("-o,--output", output, "output file (stdout when absent)");
  parse->add_option("--to", parse_to, "nt, ttl or csv (default from -o, else nt)")
      ->check(CLI::IsMember({"nt", "ttl", "csv"}));

  auto* fca = app.add_subcommand("fca", "formal context as .cxt or .csv");
  SchemaFlags fca_flags;
  std::string fca_format;
  fca->add_option("file", input)->required();
  fca->add_option("-o,--output", output);
  fca->add_option("--format", fca_format, "cxt or csv (default from -o, else cxt)")
      ->check(CLI::IsMember({"cxt", "csv"}));
  fca_flags.Attach(fca);

  auto* cue = app.add_subcommand("cue", "cue metrics as CSV");
  SchemaFlags cue_flags;
  cue->add_option("file", input)->required();
  cue->add_option("-o,--output", output);
  cue_flags.Attach(cue);

  auto* vis = app.add_subcommand("vis", "lotus or UpSet intersections as JSON");
  SchemaFlags vis_flags;
  std::vector<std::string> select;
  bool upset = false;
  vis->add_option("file", input)->required();
  vis->add_option("-o,--output", output);
  vis->add_option("--select", select, "etypes to intersect (IRIs or prefixed names)")
      ->delimiter(',')
      ->required();
  vis->add_flag("--upset", upset, "UpSet layout even for 6 or fewer sets");
  vis_flags.Attach(vis);

  auto* embed_cmd = app.add_subcommand("embed", "train an embedding, write an EMB directory");
  std::string model, loss;
  double margin = 0, lr = 0, holdout = 0;
  std::size_t dim = 0, epochs = 0, neg = 0, eval_limit = 0;
  std::uint64_t seed = 0;
  bool keep_literals = false;
  embed_cmd->add_option("file", input)->required();
  embed_cmd->add_option("-o,--output", output, "EMB directory (default <input>.emb)");
  auto* o_model = embed_cmd->add_option("--model", model, "transe or distmult");
  auto* o_loss = embed_cmd->add_option("--loss", loss, "margin_ranking or logistic");
  auto* o_margin = embed_cmd->add_option("--margin", margin);
  auto* o_dim = embed_cmd->add_option("--dim", dim);
  auto* o_epochs = embed_cmd->add_option("--epochs", epochs);
  auto* o_lr = embed_cmd->add_option("--lr", lr);
  auto* o_neg = embed_cmd->add_option("--neg", neg, "negatives per positive");
  auto* o_seed = embed_cmd->add_option("--seed", seed);
  auto* o_holdout = embed_cmd->add_option("--holdout", holdout, "held-out fraction");
  auto* o_eval = embed_cmd->add_option("--eval-limit", eval_limit);
  embed_cmd->add_flag("--keep-literals", keep_literals, "index literal objects as entities");

  auto* query = app.add_subcommand("query", "run a SELECT basic graph pattern");
  std::string query_text;
  bool query_json = false;
  query->add_option("file", input)->required();
  query->add_option("--query", query_text, "query text, or @file")->required();
  query->add_option("-o,--output", output);
  query->add_flag("--json", query_json, "SPARQL JSON results instead of CSV");

  auto* harvest_cmd = app.add_subcommand("harvest", "stage datasets from a source");
  std::string adapter_config, store, report_path;
  std::vector<std::string> only;
  harvest_cmd->add_option("--adapter", adapter_config, "adapter config JSON")->required();
  harvest_cmd->add_option("--store", store, "catalog store directory")->required();
  harvest_cmd->add_option("--report", report_path,
                          "harvest report (default <store>.harvest.json)");
  harvest_cmd->add_option("--only", only, "restrict to these external ids")->delimiter(',');

  auto* serve = app.add_subcommand("serve", "run the HTTP JSON API");
  std::string addr = "127.0.0.1:8080";
  std::string token_env = "SCHEMAGATE_TOKEN";
  std::size_t workers = 2;
  serve->add_option("--store", store)->required();
  serve->add_option("--addr", addr, "host:port");
  serve->add_option("--token-env", token_env, "environment variable with the admin token");
  serve->add_option("--workers", workers, "job worker threads");

  auto* review = app.add_subcommand("review", "approve or reject a pending dataset");
  std::string approve, reject, actor = "admin";
  review->add_option("--store", store)->required();
  auto* o_approve = review->add_option("--approve", approve, "dataset name");
  auto* o_reject = review->add_option("--reject", reject, "dataset name");
  o_approve->excludes(o_reject);
  review->add_option("--actor", actor);

  try {
    app.parse(argc, argv);
    if (review->parsed() && approve.empty() && reject.empty()) {
      throw CLI::RequiredError("--approve or --reject");
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (parse->parsed()) {
      rdf::Graph graph = pipeline::LoadGraph(input);
      std::string to = parse_to;
      if (to.empty()) {
        std::string ext = Extension(output);
        to = ext == "ttl" || ext == "csv" ? ext : "nt";
      }
      if (to == "csv") {
        Emit(rdf::TriplesToTable(graph).ToCsv(), output);
      } else {
        Emit(rdf::SerializeGraph(graph, rdf::RdfFormatFromName(to)), output);
      }
    } else if (fca->parsed()) {
      json p = fca_flags.Params();
      std::string format = fca_format;
      if (format.empty()) format = Extension(output) == "csv" ? "csv" : "cxt";
      p["format"] = format;
      auto params = pipeline::JobParams::FromJson(pipeline::JobKind::kFca, p);
      Emit(pipeline::FcaArtifact(pipeline::LoadGraph(input), params), output);
    } else if (cue->parsed()) {
      auto params = pipeline::JobParams::FromJson(pipeline::JobKind::kCue, cue_flags.Params());
      Emit(pipeline::CueArtifact(pipeline::LoadGraph(input), params), output);
    } else if (vis->parsed()) {
      json p = vis_flags.Params();
      p["select"] = select;
      p["upset"] = upset;
      auto params = pipeline::JobParams::FromJson(pipeline::JobKind::kVis, p);
      Emit(pipeline::VisArtifact(pipeline::LoadGraph(input), params), output);
    } else if (embed_cmd->parsed()) {
      json p = json::object();
      if (o_model->count()) p["model"] = model;
      if (o_loss->count()) p["loss"] = loss;
      if (o_margin->count()) p["margin"] = margin;
      if (o_dim->count()) p["dim"] = dim;
      if (o_epochs->count()) p["epochs"] = epochs;
      if (o_lr->count()) p["lr"] = lr;
      if (o_neg->count()) p["neg"] = neg;
      if (o_seed->count()) p["seed"] = seed;
      if (o_holdout->count()) p["holdout"] = holdout;
      if (o_eval->count()) p["eval_limit"] = eval_limit;
      if (keep_literals) p["drop_literals"] = false;
      auto params = pipeline::JobParams::FromJson(pipeline::JobKind::kEmb, p);
      std::string dir = output.empty() ? input + ".emb" : output;
      embed::TrainReport report =
          pipeline::EmbArtifact(pipeline::LoadGraph(input), params, dir);
      std::cerr << "wrote " << dir << " (" << report.loss_curve.size() << " epochs";
      if (!report.loss_curve.empty()) {
        std::cerr << ", final loss " << embed::FormatReal(report.loss_curve.back());
      }
      std::cerr << ")\n";
    } else if (query->parsed()) {
      std::string text = query_text;
      if (!text.empty() && text.front() == '@') text = ReadText(text.substr(1));
      gateway::QueryResult result = gateway::RunQuery(pipeline::LoadGraph(input), text);
      Emit(query_json ? result.ToJson().dump(2) + "\n" : result.ToCsv(), output);
    } else if (harvest_cmd->parsed()) {
      catalog::Catalog catalog(store);
      auto adapter = harvest::AdapterFromConfigFile(adapter_config);
      harvest::HarvestOptions options;
      if (!only.empty()) {
        options.filter = [&](const harvest::HarvestEntry& e) {
          return std::find(only.begin(), only.end(), e.external_id) != only.end();
        };
      }
      std::string report_file = report_path.empty()
                                    ? fs::path(store).lexically_normal().string() +
                                          ".harvest.json"
                                    : report_path;
      try {
        harvest::HarvestReport report = harvest::RunHarvest(catalog, *adapter, options);
        Emit(report.ToJson().dump(2) + "\n", report_file);
        for (auto status : {harvest::OutcomeStatus::kStaged,
                            harvest::OutcomeStatus::kSkippedLicense,
                            harvest::OutcomeStatus::kSkippedFormat,
                            harvest::OutcomeStatus::kParseFailed}) {
          std::cerr << harvest::StatusName(status) << ": " << report.Count(status) << "\n";
        }
        std::cerr << "already staged: " << report.already_staged.size() << "\n";
      } catch (const harvest::HarvestAborted& e) {
        Emit(e.partial().ToJson().dump(2) + "\n", report_file);
        throw;
      }
    } else if (serve->parsed()) {
      catalog::Catalog catalog(store);
      const char* token = std::getenv(token_env.c_str());
      if (token == nullptr || *token == '\0') {
        std::cerr << "warning: " << token_env << " is unset; mutations are disabled\n";
      }
      auto colon = addr.rfind(':');
      if (colon == std::string::npos) throw std::invalid_argument("--addr must be host:port");
      std::string host = addr.substr(0, colon);
      int port = std::stoi(addr.substr(colon + 1));
      gateway::ApiServer server(catalog, {token ? token : "", workers});
      int bound = server.Start(host, port);
      if (bound < 0) throw std::runtime_error("cannot listen on " + addr);
      std::cerr << "serving /api/v1 on " << host << ":" << bound << "\n";
      server.Wait();
    } else if (review->parsed()) {
      catalog::Catalog catalog(store);
      bool approving = !approve.empty();
      catalog::DatasetRecord record =
          catalog.Review(approving ? approve : reject,
                         approving ? catalog::Decision::kApprove : catalog::Decision::kReject,
                         actor);
      std::cout << record.name << " " << catalog::StateName(record.state) << " (version "
                << record.version << ")\n";
    }
  } catch (const rdf::ParseError& e) {
    std::cerr << "error: " << input << ":" << e.line() << ":" << e.column() << ": "
              << e.message() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
