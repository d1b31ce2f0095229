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

#include "schemagate/embed/emb_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace schemagate::embed {

namespace fs = std::filesystem;

std::string FormatReal(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw EmbIoError("cannot write " + path.string());
  out << content;
  if (!out.flush()) throw EmbIoError("cannot write " + path.string());
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EmbIoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string Table(const std::vector<std::string>& labels,
                  const std::vector<double>& values, std::size_t dim) {
  std::string out;
  for (std::size_t row = 0; row < labels.size(); ++row) {
    out += labels[row];
    for (std::size_t d = 0; d < dim; ++d) {
      out += '\t';
      out += FormatReal(values[row * dim + d]);
    }
    out += '\n';
  }
  return out;
}

void ParseTable(const std::string& text, const fs::path& path, std::size_t dim,
                std::vector<std::string>& labels, std::vector<double>& values) {
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    auto where = [&] { return path.string() + ":" + std::to_string(lineno); };
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw EmbIoError(where() + ": missing vector");
    labels.push_back(line.substr(0, tab));
    std::size_t count = 0;
    while (tab != std::string::npos) {
      std::size_t next = line.find('\t', tab + 1);
      std::string field = line.substr(tab + 1, next == std::string::npos
                                                   ? std::string::npos
                                                   : next - tab - 1);
      char* end = nullptr;
      errno = 0;
      double v = std::strtod(field.c_str(), &end);
      if (field.empty() || *end != '\0' || errno == ERANGE) {
        throw EmbIoError(where() + ": bad number '" + field + "'");
      }
      values.push_back(v);
      ++count;
      tab = next;
    }
    if (count != dim) {
      throw EmbIoError(where() + ": expected " + std::to_string(dim) +
                       " values, found " + std::to_string(count));
    }
  }
}

}  // namespace

void ExportModel(const TripleIndex& index, const ModelParams& params,
                 const TrainConfig& config, const TrainReport& report,
                 const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw EmbIoError("cannot create directory " + dir.string());
  }
  WriteFile(dir / "entities.tsv",
            Table(index.entities, params.entity_vectors, params.dim));
  WriteFile(dir / "relations.tsv",
            Table(index.relations, params.relation_vectors, params.dim));
  nlohmann::json cfg = config.ToJson();
  cfg["entities"] = index.num_entities();
  cfg["relations"] = index.num_relations();
  cfg["facts"] = index.facts.size();
  cfg["dropped_literals"] = index.dropped_literals;
  WriteFile(dir / "config.json", cfg.dump(2) + "\n");
  WriteFile(dir / "metrics.json", report.ToJson().dump(2) + "\n");
}

LoadedModel ImportModel(const fs::path& dir) {
  LoadedModel loaded;
  try {
    loaded.config = nlohmann::json::parse(ReadFile(dir / "config.json"));
    loaded.metrics = nlohmann::json::parse(ReadFile(dir / "metrics.json"));
    loaded.params.model = ModelFromName(loaded.config.at("model").get<std::string>());
    loaded.params.dim = loaded.config.at("dim").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw EmbIoError("malformed EMB metadata in " + dir.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw EmbIoError(e.what());
  }
  ParseTable(ReadFile(dir / "entities.tsv"), dir / "entities.tsv",
             loaded.params.dim, loaded.entities, loaded.params.entity_vectors);
  ParseTable(ReadFile(dir / "relations.tsv"), dir / "relations.tsv",
             loaded.params.dim, loaded.relations, loaded.params.relation_vectors);
  return loaded;
}

}  // namespace schemagate::embed
