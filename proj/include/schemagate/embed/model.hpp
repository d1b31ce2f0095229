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

#ifndef SCHEMAGATE_EMBED_MODEL_HPP_
#define SCHEMAGATE_EMBED_MODEL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "schemagate/embed/index.hpp"

namespace schemagate::embed {

enum class ModelKind { kTransE, kDistMult };
enum class LossKind { kMarginRanking, kLogistic };

std::string_view ModelName(ModelKind kind);
std::string_view LossName(LossKind kind);
ModelKind ModelFromName(std::string_view name);
LossKind LossFromName(std::string_view name);

struct TrainConfig {
  ModelKind model = ModelKind::kTransE;
  LossKind loss = LossKind::kMarginRanking;
  double margin = 1.0;  // margin_ranking only
  std::size_t dim = 8;
  std::size_t epochs = 100;
  double learning_rate = 0.05;
  std::size_t negatives_per_positive = 1;
  std::uint64_t seed = 42;
  double holdout_fraction = 0.1;
  // Upper bound on facts ranked per evaluation split.
  std::size_t eval_limit = 1000;
  // Drop literal-object triples before indexing.
  bool drop_literals = true;

  // Throws std::invalid_argument on non-positive counts, rates or margins.
  void Validate() const;

  nlohmann::json ToJson() const;
  // Unknown keys are rejected; missing keys keep their defaults.
  static TrainConfig FromJson(const nlohmann::json& doc);
};

// Embedding tables, row-major: entity_vectors[e * dim + d].
struct ModelParams {
  ModelKind model = ModelKind::kTransE;
  std::size_t dim = 0;
  std::vector<double> entity_vectors;
  std::vector<double> relation_vectors;

  std::size_t num_entities() const { return dim == 0 ? 0 : entity_vectors.size() / dim; }
  std::size_t num_relations() const { return dim == 0 ? 0 : relation_vectors.size() / dim; }

  std::span<double> Entity(EntityId e) {
    return {entity_vectors.data() + static_cast<std::size_t>(e) * dim, dim};
  }
  std::span<const double> Entity(EntityId e) const {
    return {entity_vectors.data() + static_cast<std::size_t>(e) * dim, dim};
  }
  std::span<double> Relation(RelationId r) {
    return {relation_vectors.data() + static_cast<std::size_t>(r) * dim, dim};
  }
  std::span<const double> Relation(RelationId r) const {
    return {relation_vectors.data() + static_cast<std::size_t>(r) * dim, dim};
  }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

// TransE: -||h + r - t||_2. DistMult: sum_d h[d] * r[d] * t[d]. Higher
// means more plausible.
double Score(const ModelParams& params, const Fact& fact);

// Partial derivatives of Score with respect to the head, relation and tail
// rows. TransE at h + r = t has no gradient; zeros are returned there.
struct ScoreGradient {
  std::vector<double> head;
  std::vector<double> relation;
  std::vector<double> tail;
};
ScoreGradient GradientOfScore(const ModelParams& params, const Fact& fact);

// Rows touched by one SGD step, keyed by id.
struct SparseGradient {
  std::vector<std::pair<EntityId, std::vector<double>>> entities;
  std::vector<std::pair<RelationId, std::vector<double>>> relations;

  std::vector<double>& EntityRow(EntityId id, std::size_t dim);
  std::vector<double>& RelationRow(RelationId id, std::size_t dim);
};

// Loss of one positive fact against its negatives:
//   margin_ranking: sum_j max(0, margin - s(pos) + s(neg_j))
//   logistic:       softplus(-s(pos)) + sum_j softplus(s(neg_j))
// When `gradient` is non-null the loss gradient is accumulated into it.
double FactLoss(const ModelParams& params, const Fact& positive,
                std::span<const Fact> negatives, const TrainConfig& config,
                SparseGradient* gradient = nullptr);

double Softplus(double x);

}  // namespace schemagate::embed

#endif  // SCHEMAGATE_EMBED_MODEL_HPP_
