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

#include "schemagate/embed/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace schemagate::embed {

namespace {

std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& word : s_) word = SplitMix64(seed);
}

std::uint64_t Rng::Next() {
  const std::uint64_t result = Rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = Rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return x % bound;
}

double Rng::Unit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

std::vector<Fact> SampleNegatives(const TripleIndex& index, const Fact& fact,
                                  std::size_t k, Rng& rng) {
  const std::size_t n = index.num_entities();
  std::vector<Fact> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Fact candidate = fact;
    const bool corrupt_head = (rng.Next() >> 63) != 0;
    const EntityId original = corrupt_head ? fact.head : fact.tail;
    EntityId& slot = corrupt_head ? candidate.head : candidate.tail;
    for (int attempt = 0; attempt < 100 && n > 1; ++attempt) {
      // Draw from the n - 1 entities other than the original one.
      auto draw = static_cast<EntityId>(rng.Below(n - 1));
      slot = draw >= original ? draw + 1 : draw;
      if (!index.Contains(candidate)) break;
    }
    out.push_back(candidate);
  }
  return out;
}

ModelParams InitializeModel(const TripleIndex& index, const TrainConfig& config,
                            Rng& rng) {
  ModelParams params;
  params.model = config.model;
  params.dim = config.dim;
  const double bound = 6.0 / std::sqrt(static_cast<double>(config.dim));
  params.entity_vectors.resize(index.num_entities() * config.dim);
  params.relation_vectors.resize(index.num_relations() * config.dim);
  for (double& v : params.entity_vectors) v = rng.Uniform(-bound, bound);
  for (double& v : params.relation_vectors) v = rng.Uniform(-bound, bound);
  return params;
}

nlohmann::json RankingMetrics::ToJson() const {
  nlohmann::json doc = {{"facts", facts}};
  if (facts == 0) {
    doc["mean_rank"] = nullptr;
    doc["hits_at_1"] = nullptr;
    doc["hits_at_10"] = nullptr;
  } else {
    doc["mean_rank"] = mean_rank;
    doc["hits_at_1"] = hits_at_1;
    doc["hits_at_10"] = hits_at_10;
  }
  return doc;
}

RankingMetrics EvaluateRanking(const ModelParams& params,
                               std::span<const Fact> facts) {
  RankingMetrics metrics;
  metrics.facts = facts.size();
  if (facts.empty()) return metrics;
  const auto n = static_cast<EntityId>(params.num_entities());
  double rank_sum = 0.0;
  std::size_t hits1 = 0;
  std::size_t hits10 = 0;
  auto record = [&](std::size_t rank) {
    rank_sum += static_cast<double>(rank);
    if (rank <= 1) ++hits1;
    if (rank <= 10) ++hits10;
  };
  for (const Fact& fact : facts) {
    const double truth = Score(params, fact);
    std::size_t tail_rank = 1;
    std::size_t head_rank = 1;
    for (EntityId e = 0; e < n; ++e) {
      if (e != fact.tail && Score(params, {fact.head, fact.relation, e}) > truth) {
        ++tail_rank;
      }
      if (e != fact.head && Score(params, {e, fact.relation, fact.tail}) > truth) {
        ++head_rank;
      }
    }
    record(tail_rank);
    record(head_rank);
  }
  const double total = 2.0 * static_cast<double>(facts.size());
  metrics.mean_rank = rank_sum / total;
  metrics.hits_at_1 = static_cast<double>(hits1) / total;
  metrics.hits_at_10 = static_cast<double>(hits10) / total;
  return metrics;
}

nlohmann::json TrainReport::ToJson() const {
  return {{"loss_curve", loss_curve},
          {"train_facts", train_facts},
          {"heldout_facts", heldout_facts},
          {"heldout", heldout.ToJson()},
          {"train", train.ToJson()}};
}

namespace {

void NormalizeEntities(ModelParams& params) {
  for (std::size_t e = 0; e < params.num_entities(); ++e) {
    auto row = params.Entity(static_cast<EntityId>(e));
    double norm = 0.0;
    for (double v : row) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    for (double& v : row) v /= norm;
  }
}

std::span<const Fact> Limited(const std::vector<Fact>& facts, std::size_t limit) {
  return {facts.data(), std::min(facts.size(), limit)};
}

}  // namespace

TrainResult Train(const TripleIndex& index, const TrainConfig& config) {
  config.Validate();
  if (index.facts.empty()) throw EmptyIndexError("index has no facts");
  Rng rng(config.seed);
  TrainResult result;
  result.params = InitializeModel(index, config, rng);
  ModelParams& params = result.params;

  std::vector<std::size_t> order(index.facts.size());
  std::iota(order.begin(), order.end(), 0);
  rng.Shuffle(order);
  std::size_t heldout_count = static_cast<std::size_t>(
      std::floor(config.holdout_fraction * static_cast<double>(order.size())));
  if (heldout_count >= order.size()) heldout_count = 0;
  std::vector<std::size_t> heldout_ids(order.begin(), order.begin() + heldout_count);
  std::vector<std::size_t> train_ids(order.begin() + heldout_count, order.end());
  std::sort(heldout_ids.begin(), heldout_ids.end());
  std::sort(train_ids.begin(), train_ids.end());
  std::vector<Fact> heldout;
  std::vector<Fact> train;
  for (std::size_t id : heldout_ids) heldout.push_back(index.facts[id]);
  for (std::size_t id : train_ids) train.push_back(index.facts[id]);

  TrainReport& report = result.report;
  report.train_facts = train.size();
  report.heldout_facts = heldout.size();

  const std::size_t dim = config.dim;
  for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
    rng.Shuffle(train);
    double total = 0.0;
    for (const Fact& fact : train) {
      std::vector<Fact> negatives =
          SampleNegatives(index, fact, config.negatives_per_positive, rng);
      SparseGradient gradient;
      total += FactLoss(params, fact, negatives, config, &gradient);
      for (const auto& [id, row] : gradient.entities) {
        auto target = params.Entity(id);
        for (std::size_t d = 0; d < dim; ++d) target[d] -= config.learning_rate * row[d];
      }
      for (const auto& [id, row] : gradient.relations) {
        auto target = params.Relation(id);
        for (std::size_t d = 0; d < dim; ++d) target[d] -= config.learning_rate * row[d];
      }
    }
    double mean = total / static_cast<double>(train.size());
    if (!std::isfinite(mean)) {
      throw TrainingError("non-finite loss in epoch " + std::to_string(epoch));
    }
    report.loss_curve.push_back(mean);
    if (config.model == ModelKind::kTransE) NormalizeEntities(params);
  }
  // Restore the stable order so metrics do not depend on the last shuffle.
  std::sort(train.begin(), train.end());
  report.heldout = EvaluateRanking(params, Limited(heldout, config.eval_limit));
  report.train = EvaluateRanking(params, Limited(train, config.eval_limit));
  return result;
}

}  // namespace schemagate::embed
