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

#ifndef SCHEMAGATE_EMBED_TRAINER_HPP_
#define SCHEMAGATE_EMBED_TRAINER_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"
#include "schemagate/embed/index.hpp"
#include "schemagate/embed/model.hpp"

namespace schemagate::embed {

// SplitMix64-seeded xoshiro256** generator with portable helpers, so the
// same seed yields the same run on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t Next();
  // Uniform in [0, bound); bound > 0.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [0, 1).
  double Unit();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Unit(); }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

 private:
  std::uint64_t s_[4];
};

// k corrupted copies of `fact`. Each flips a fair coin for the head or the
// tail, then replaces it with a different, uniformly drawn entity, redrawing
// the entity up to 100 times while the result is a known fact.
std::vector<Fact> SampleNegatives(const TripleIndex& index, const Fact& fact,
                                  std::size_t k, Rng& rng);

// Rows drawn uniformly from [-6/sqrt(dim), 6/sqrt(dim)].
ModelParams InitializeModel(const TripleIndex& index, const TrainConfig& config,
                            Rng& rng);

// Raw (unfiltered) link-prediction ranks: each fact contributes a tail rank
// and a head rank, rank = 1 + number of candidates scoring strictly higher.
struct RankingMetrics {
  std::size_t facts = 0;
  double mean_rank = 0.0;
  double hits_at_1 = 0.0;
  double hits_at_10 = 0.0;

  nlohmann::json ToJson() const;
};

RankingMetrics EvaluateRanking(const ModelParams& params,
                               std::span<const Fact> facts);

struct TrainReport {
  std::vector<double> loss_curve;  // mean per-fact loss per epoch
  std::size_t train_facts = 0;
  std::size_t heldout_facts = 0;
  RankingMetrics heldout;  // over the held-out split
  RankingMetrics train;    // over the facts the model was fitted on

  nlohmann::json ToJson() const;
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrainResult {
  ModelParams params;
  TrainReport report;
};

// Plain SGD, one fact per step. The seed fixes initialization, the held-out
// split, per-epoch shuffles and negative sampling. Throws TrainingError
// naming the epoch when the loss stops being finite.
TrainResult Train(const TripleIndex& index, const TrainConfig& config);

}  // namespace schemagate::embed

#endif  // SCHEMAGATE_EMBED_TRAINER_HPP_
