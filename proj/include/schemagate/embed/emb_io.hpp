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

#ifndef SCHEMAGATE_EMBED_EMB_IO_HPP_
#define SCHEMAGATE_EMBED_EMB_IO_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "schemagate/embed/index.hpp"
#include "schemagate/embed/model.hpp"
#include "schemagate/embed/trainer.hpp"

namespace schemagate::embed {

class EmbIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes the EMB layout into `dir`:
//   entities.tsv   label TAB v_1 ... v_dim, one row per entity id
//   relations.tsv  same for relations
//   config.json    TrainConfig plus counts
//   metrics.json   TrainReport
// Reals are printed with 17 significant digits so reloading is exact.
void ExportModel(const TripleIndex& index, const ModelParams& params,
                 const TrainConfig& config, const TrainReport& report,
                 const std::filesystem::path& dir);

struct LoadedModel {
  ModelParams params;
  std::vector<std::string> entities;
  std::vector<std::string> relations;
  nlohmann::json config;
  nlohmann::json metrics;
};

LoadedModel ImportModel(const std::filesystem::path& dir);

// 17 significant digits, shortest form the C library produces.
std::string FormatReal(double value);

}  // namespace schemagate::embed

#endif  // SCHEMAGATE_EMBED_EMB_IO_HPP_
