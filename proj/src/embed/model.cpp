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

#include "schemagate/embed/model.hpp"

#include <cmath>
#include <stdexcept>

namespace schemagate::embed {

std::string_view ModelName(ModelKind kind) {
  return kind == ModelKind::kTransE ? "transe" : "distmult";
}

std::string_view LossName(LossKind kind) {
  return kind == LossKind::kMarginRanking ? "margin_ranking" : "logistic";
}

ModelKind ModelFromName(std::string_view name) {
  if (name == "transe") return ModelKind::kTransE;
  if (name == "distmult") return ModelKind::kDistMult;
  if (name == "rescal") {
    throw std::invalid_argument("rescal scoring is not trainable in this version");
  }
  throw std::invalid_argument("unknown embedding model '" + std::string(name) +
                              "' (expected transe or distmult)");
}

LossKind LossFromName(std::string_view name) {
  if (name == "margin_ranking" || name == "margin") return LossKind::kMarginRanking;
  if (name == "logistic") return LossKind::kLogistic;
  throw std::invalid_argument("unknown loss '" + std::string(name) +
                              "' (expected margin_ranking or logistic)");
}

void TrainConfig::Validate() const {
  if (dim == 0) throw std::invalid_argument("dim must be positive");
  if (negatives_per_positive == 0) {
    throw std::invalid_argument("negatives per positive must be positive");
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw std::invalid_argument("learning rate must be positive");
  }
  if (loss == LossKind::kMarginRanking && (!(margin > 0.0) || !std::isfinite(margin))) {
    throw std::invalid_argument("margin must be positive");
  }
  if (!(holdout_fraction >= 0.0 && holdout_fraction < 1.0)) {
    throw std::invalid_argument("holdout fraction must be in [0, 1)");
  }
}

nlohmann::json TrainConfig::ToJson() const {
  nlohmann::json doc = {
      {"model", ModelName(model)},
      {"loss", LossName(loss)},
      {"dim", dim},
      {"epochs", epochs},
      {"lr", learning_rate},
      {"neg", negatives_per_positive},
      {"seed", seed},
      {"holdout", holdout_fraction},
      {"eval_limit", eval_limit},
      {"drop_literals", drop_literals},
  };
  if (loss == LossKind::kMarginRanking) doc["margin"] = margin;
  return doc;
}

namespace {

template <typename T>
T Unsigned(const nlohmann::json& value, const char* key) {
  if (value.is_number_unsigned()) return value.get<T>();
  if (value.is_number_integer()) {
    if (value.get<std::int64_t>() >= 0) return static_cast<T>(value.get<std::int64_t>());
    throw std::invalid_argument(std::string(key) + " must be positive");
  }
  throw std::invalid_argument(std::string(key) + " must be an integer");
}

double Real(const nlohmann::json& value, const char* key) {
  if (!value.is_number()) {
    throw std::invalid_argument(std::string(key) + " must be a number");
  }
  return value.get<double>();
}

}  // namespace

TrainConfig TrainConfig::FromJson(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("training parameters must be an object");
  TrainConfig cfg;
  try {
  for (const auto& [key, value] : doc.items()) {
    if (key == "model") {
      cfg.model = ModelFromName(value.get<std::string>());
    } else if (key == "loss") {
      cfg.loss = LossFromName(value.get<std::string>());
    } else if (key == "margin") {
      cfg.margin = Real(value, "margin");
    } else if (key == "dim") {
      cfg.dim = Unsigned<std::size_t>(value, "dim");
    } else if (key == "epochs") {
      cfg.epochs = Unsigned<std::size_t>(value, "epochs");
    } else if (key == "lr") {
      cfg.learning_rate = Real(value, "lr");
    } else if (key == "neg") {
      cfg.negatives_per_positive = Unsigned<std::size_t>(value, "neg");
    } else if (key == "seed") {
      cfg.seed = Unsigned<std::uint64_t>(value, "seed");
    } else if (key == "holdout") {
      cfg.holdout_fraction = Real(value, "holdout");
    } else if (key == "eval_limit") {
      cfg.eval_limit = Unsigned<std::size_t>(value, "eval_limit");
    } else if (key == "drop_literals") {
      cfg.drop_literals = value.get<bool>();
    } else {
      throw std::invalid_argument("unknown training parameter '" + key + "'");
    }
  }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed training parameter: ") +
                                e.what());
  }
  cfg.Validate();
  return cfg;
}

double Score(const ModelParams& params, const Fact& fact) {
  auto h = params.Entity(fact.head);
  auto r = params.Relation(fact.relation);
  auto t = params.Entity(fact.tail);
  double acc = 0.0;
  if (params.model == ModelKind::kTransE) {
    for (std::size_t d = 0; d < params.dim; ++d) {
      double diff = h[d] + r[d] - t[d];
      acc += diff * diff;
    }
    return -std::sqrt(acc);
  }
  for (std::size_t d = 0; d < params.dim; ++d) acc += h[d] * r[d] * t[d];
  return acc;
}

ScoreGradient GradientOfScore(const ModelParams& params, const Fact& fact) {
  const std::size_t dim = params.dim;
  auto h = params.Entity(fact.head);
  auto r = params.Relation(fact.relation);
  auto t = params.Entity(fact.tail);
  ScoreGradient g{std::vector<double>(dim), std::vector<double>(dim),
                  std::vector<double>(dim)};
  if (params.model == ModelKind::kTransE) {
    double norm = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      double diff = h[d] + r[d] - t[d];
      norm += diff * diff;
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) return g;
    for (std::size_t d = 0; d < dim; ++d) {
      double u = (h[d] + r[d] - t[d]) / norm;
      g.head[d] = -u;
      g.relation[d] = -u;
      g.tail[d] = u;
    }
    return g;
  }
  for (std::size_t d = 0; d < dim; ++d) {
    g.head[d] = r[d] * t[d];
    g.relation[d] = h[d] * t[d];
    g.tail[d] = h[d] * r[d];
  }
  return g;
}

std::vector<double>& SparseGradient::EntityRow(EntityId id, std::size_t dim) {
  for (auto& [key, row] : entities) {
    if (key == id) return row;
  }
  entities.emplace_back(id, std::vector<double>(dim, 0.0));
  return entities.back().second;
}

std::vector<double>& SparseGradient::RelationRow(RelationId id, std::size_t dim) {
  for (auto& [key, row] : relations) {
    if (key == id) return row;
  }
  relations.emplace_back(id, std::vector<double>(dim, 0.0));
  return relations.back().second;
}

double Softplus(double x) {
  return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

namespace {

double Sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

// gradient += weight * d score(fact) / d params
void AccumulateScoreGradient(const ModelParams& params, const Fact& fact,
                             double weight, SparseGradient& gradient) {
  if (weight == 0.0) return;
  ScoreGradient g = GradientOfScore(params, fact);
  const std::size_t dim = params.dim;
  {
    auto& row = gradient.EntityRow(fact.head, dim);
    for (std::size_t d = 0; d < dim; ++d) row[d] += weight * g.head[d];
  }
  {
    auto& row = gradient.RelationRow(fact.relation, dim);
    for (std::size_t d = 0; d < dim; ++d) row[d] += weight * g.relation[d];
  }
  {
    auto& row = gradient.EntityRow(fact.tail, dim);
    for (std::size_t d = 0; d < dim; ++d) row[d] += weight * g.tail[d];
  }
}

}  // namespace

double FactLoss(const ModelParams& params, const Fact& positive,
                std::span<const Fact> negatives, const TrainConfig& config,
                SparseGradient* gradient) {
  const double pos = Score(params, positive);
  double loss = 0.0;
  double pos_weight = 0.0;
  if (config.loss == LossKind::kMarginRanking) {
    for (const Fact& neg_fact : negatives) {
      double neg = Score(params, neg_fact);
      double violation = config.margin - pos + neg;
      if (violation > 0.0) {
        loss += violation;
        pos_weight -= 1.0;
        if (gradient) AccumulateScoreGradient(params, neg_fact, 1.0, *gradient);
      }
    }
  } else {
    loss += Softplus(-pos);
    pos_weight = -Sigmoid(-pos);
    for (const Fact& neg_fact : negatives) {
      double neg = Score(params, neg_fact);
      loss += Softplus(neg);
      if (gradient) {
        AccumulateScoreGradient(params, neg_fact, Sigmoid(neg), *gradient);
      }
    }
  }
  if (gradient) AccumulateScoreGradient(params, positive, pos_weight, *gradient);
  return loss;
}

}  // namespace schemagate::embed
