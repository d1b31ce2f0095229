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

#include <cmath>
#include <set>
#include <string>

#include "gtest/gtest.h"
#include "schemagate/embed/emb_io.hpp"
#include "schemagate/embed/index.hpp"
#include "schemagate/embed/model.hpp"
#include "schemagate/embed/trainer.hpp"
#include "schemagate/rdf/parser.hpp"
#include "test_util.hpp"

namespace schemagate::embed {
namespace {

using testing::Fixture;
using testing::ReadFile;

TripleIndex ToyIndex() {
  return BuildIndex(rdf::ParseTurtle(ReadFile(Fixture("toy.ttl"))), true);
}

// Ring of n entities linked by `next`, plus a `prev` relation back.
TripleIndex RingIndex(int n) {
  std::vector<std::array<std::string, 3>> facts;
  for (int i = 0; i < n; ++i) {
    std::string a = "e" + std::to_string(i);
    std::string b = "e" + std::to_string((i + 1) % n);
    facts.push_back({a, "next", b});
    facts.push_back({b, "prev", a});
  }
  return IndexFromLabels(facts);
}

std::vector<std::vector<std::string>> ReadTsv(const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(ReadFile(path));
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, '\t')) row.push_back(field);
    rows.push_back(row);
  }
  return rows;
}

ModelParams Manual(ModelKind model, std::vector<double> entities,
                   std::vector<double> relations, std::size_t dim) {
  ModelParams p;
  p.model = model;
  p.dim = dim;
  p.entity_vectors = std::move(entities);
  p.relation_vectors = std::move(relations);
  return p;
}

TEST(IndexTest, ToyCounts) {
  TripleIndex index = ToyIndex();
  EXPECT_EQ(index.num_entities(), 6u);
  EXPECT_EQ(index.num_relations(), 3u);
  EXPECT_EQ(index.facts.size(), 6u);
  EXPECT_TRUE(std::is_sorted(index.entities.begin(), index.entities.end()));
  for (std::size_t i = 0; i < index.entities.size(); ++i) {
    EXPECT_EQ(index.entity_to_id.at(index.entities[i]), static_cast<EntityId>(i));
  }
}

TEST(IndexTest, LiteralHandling) {
  auto graph = rdf::ParseTurtle(
      "@prefix ex: <http://e/> . ex:a ex:p ex:b ; ex:label \"A\" ; ex:n 3 .");
  TripleIndex dropped = BuildIndex(graph, true);
  EXPECT_EQ(dropped.facts.size(), 1u);
  EXPECT_EQ(dropped.dropped_literals, 2u);
  TripleIndex kept = BuildIndex(graph, false);
  EXPECT_EQ(kept.facts.size(), 3u);
  EXPECT_EQ(kept.num_entities(), 4u);
  auto literal_only = rdf::ParseTurtle("<http://e/a> <http://e/p> \"x\" .");
  EXPECT_THROW(BuildIndex(literal_only, true), EmptyIndexError);
}

TEST(ScoreTest, HandValues) {
  auto transe = Manual(ModelKind::kTransE, {1, 0, 0, 1}, {0, 0}, 2);
  EXPECT_DOUBLE_EQ(Score(transe, {0, 0, 1}), -std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(Score(transe, {0, 0, 0}), 0.0);
  auto distmult = Manual(ModelKind::kDistMult, {1, 2, 5, 6}, {3, 4}, 2);
  EXPECT_DOUBLE_EQ(Score(distmult, {0, 0, 1}), 63.0);
  // Zero distance has no gradient; zeros rather than NaN.
  auto g = GradientOfScore(transe, {0, 0, 0});
  for (double v : g.head) EXPECT_EQ(v, 0.0);
}

TEST(LossTest, HandValues) {
  TrainConfig margin;
  margin.margin = 1.0;
  // Entities on a line: distances 1 and 3 from entity 0.
  auto p = Manual(ModelKind::kTransE, {0, 1, 3}, {0}, 1);
  std::vector<Fact> far = {{0, 0, 2}};
  EXPECT_DOUBLE_EQ(FactLoss(p, {0, 0, 1}, far, margin), 0.0);
  std::vector<Fact> near = {{0, 0, 1}};
  EXPECT_DOUBLE_EQ(FactLoss(p, {0, 0, 2}, near, margin), 3.0);

  TrainConfig logistic;
  logistic.loss = LossKind::kLogistic;
  auto zero = Manual(ModelKind::kDistMult, {0, 0}, {0}, 1);
  std::vector<Fact> neg = {{1, 0, 0}};
  EXPECT_NEAR(FactLoss(zero, {0, 0, 1}, neg, logistic), 2.0 * std::log(2.0), 1e-15);
  EXPECT_NEAR(Softplus(1000.0), 1000.0, 1e-12);
  EXPECT_NEAR(Softplus(-1000.0), 0.0, 1e-12);
}

TEST(LossTest, GradientsMatchFiniteDifferences) {
  TripleIndex index = RingIndex(10);
  for (ModelKind model : {ModelKind::kTransE, ModelKind::kDistMult}) {
    for (LossKind loss : {LossKind::kMarginRanking, LossKind::kLogistic}) {
      TrainConfig cfg;
      cfg.model = model;
      cfg.loss = loss;
      cfg.margin = 2.0;
      cfg.dim = 6;
      Rng rng(9);
      for (int point = 0; point < 20; ++point) {
        ModelParams params = InitializeModel(index, cfg, rng);
        const Fact& fact = index.facts[rng.Below(index.facts.size())];
        auto negs = SampleNegatives(index, fact, 3, rng);
        EXPECT_LT(testing::GradientError(params, fact, negs, cfg), 1e-4)
            << ModelName(model) << "/" << LossName(loss) << " point " << point;
      }
    }
  }
}

TEST(RngTest, DeterministicAndUniform) {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    auto x = a.Next();
    EXPECT_EQ(x, b.Next());
    EXPECT_NE(x, c.Next());
  }
  Rng r(1);
  std::vector<int> counts(7);
  for (int i = 0; i < 70000; ++i) ++counts[r.Below(7)];
  for (int c7 : counts) EXPECT_NEAR(c7, 10000, 500);
  for (int i = 0; i < 1000; ++i) {
    double u = r.Unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(NegativeSamplingTest, CorruptsOneSideFairly) {
  TripleIndex index = RingIndex(50);
  Rng rng(42);
  std::size_t heads = 0;
  const std::size_t draws = 1000;
  for (std::size_t i = 0; i < draws; ++i) {
    const Fact& fact = index.facts[i % index.facts.size()];
    auto negs = SampleNegatives(index, fact, 1, rng);
    ASSERT_EQ(negs.size(), 1u);
    const Fact& n = negs[0];
    EXPECT_EQ(n.relation, fact.relation);
    EXPECT_TRUE((n.head == fact.head) != (n.tail == fact.tail));
    EXPECT_FALSE(index.Contains(n));
    heads += n.head != fact.head;
  }
  EXPECT_NEAR(static_cast<double>(heads) / draws, 0.5, 0.06);
}

TEST(TrainTest, ZeroEpochsGivesEmptyCurve) {
  TrainConfig cfg;
  cfg.epochs = 0;
  auto result = Train(ToyIndex(), cfg);
  EXPECT_TRUE(result.report.loss_curve.empty());
  EXPECT_EQ(result.report.train_facts + result.report.heldout_facts, 6u);
  EXPECT_EQ(result.params.num_entities(), 6u);
}

TEST(NegativeSamplingTest, ToyIndexHeadFraction) {
  TripleIndex index = ToyIndex();
  Rng rng(42);
  std::size_t heads = 0;
  for (int i = 0; i < 1000; ++i) {
    const Fact& fact = index.facts[0];
    heads += SampleNegatives(index, fact, 1, rng)[0].head != fact.head;
  }
  EXPECT_NEAR(heads / 1000.0, 0.5, 0.06);
}

TEST(NegativeSamplingTest, TwoEntitiesAlwaysSwapInTheOther) {
  TripleIndex index = IndexFromLabels({{"a", "p", "b"}});
  Rng rng(3);
  const Fact& fact = index.facts[0];
  for (int i = 0; i < 100; ++i) {
    auto negs = SampleNegatives(index, fact, 1, rng);
    ASSERT_EQ(negs.size(), 1u);
    const Fact& n = negs[0];
    EXPECT_TRUE((n.head == fact.tail && n.tail == fact.tail) ||
                (n.head == fact.head && n.tail == fact.head));
  }
}

TEST(TrainTest, ZeroEpochsKeepsInitialParameters) {
  TrainConfig cfg;
  cfg.epochs = 0;
  cfg.seed = 11;
  TripleIndex index = ToyIndex();
  Rng rng(cfg.seed);
  EXPECT_EQ(Train(index, cfg).params, InitializeModel(index, cfg, rng));
}

TEST(TrainTest, ToyLossDrops) {
  TrainConfig cfg;
  cfg.epochs = 200;
  cfg.holdout_fraction = 0.0;
  auto result = Train(ToyIndex(), cfg);
  ASSERT_EQ(result.report.loss_curve.size(), 200u);
  EXPECT_LE(result.report.loss_curve.back(), 0.1 * result.report.loss_curve.front());
}

TEST(TrainTest, HoldoutFloorAndFallback) {
  TrainConfig cfg;
  cfg.epochs = 1;
  cfg.holdout_fraction = 0.1;
  auto ring = Train(RingIndex(10), cfg);
  EXPECT_EQ(ring.report.heldout_facts, 2u);
  EXPECT_EQ(ring.report.train_facts, 18u);
  auto single = Train(IndexFromLabels({{"a", "p", "b"}}), [] {
    TrainConfig c;
    c.epochs = 1;
    c.holdout_fraction = 0.99;
    return c;
  }());
  EXPECT_EQ(single.report.heldout_facts, 0u);
  EXPECT_EQ(single.report.train_facts, 1u);
  EXPECT_TRUE(single.report.heldout.ToJson()["mean_rank"].is_null());
}

TEST(TrainTest, TransEKeepsUnitEntities) {
  TrainConfig cfg;
  cfg.epochs = 5;
  auto result = Train(RingIndex(12), cfg);
  for (std::size_t e = 0; e < result.params.num_entities(); ++e) {
    double norm = 0.0;
    for (double v : result.params.Entity(static_cast<EntityId>(e))) norm += v * v;
    EXPECT_NEAR(std::sqrt(norm), 1.0, 1e-12);
  }
}

TEST(TrainTest, SeedFixesEverything) {
  TrainConfig cfg;
  cfg.epochs = 10;
  auto a = Train(RingIndex(15), cfg);
  auto b = Train(RingIndex(15), cfg);
  EXPECT_EQ(a.params, b.params);
  EXPECT_EQ(a.report.loss_curve, b.report.loss_curve);
  cfg.seed = 7;
  auto c = Train(RingIndex(15), cfg);
  EXPECT_NE(a.params, c.params);
}

TEST(TrainTest, DivergenceNamesTheEpoch) {
  TrainConfig cfg;
  cfg.model = ModelKind::kDistMult;
  cfg.loss = LossKind::kLogistic;
  cfg.learning_rate = 1e150;
  cfg.epochs = 50;
  try {
    Train(RingIndex(10), cfg);
    FAIL() << "expected divergence";
  } catch (const TrainingError& e) {
    EXPECT_NE(std::string(e.what()).find("epoch"), std::string::npos);
  }
}

TEST(ConfigTest, JsonValidation) {
  auto cfg = TrainConfig::FromJson({{"model", "distmult"}, {"loss", "logistic"}, {"dim", 4}});
  EXPECT_EQ(cfg.model, ModelKind::kDistMult);
  EXPECT_EQ(cfg.dim, 4u);
  EXPECT_EQ(cfg.epochs, 100u);
  EXPECT_FALSE(cfg.ToJson().contains("margin"));
  EXPECT_EQ(TrainConfig{}.ToJson()["margin"], 1.0);
  EXPECT_THROW(TrainConfig::FromJson({{"model", "rescal"}}), std::invalid_argument);
  EXPECT_THROW(TrainConfig::FromJson({{"dims", 4}}), std::invalid_argument);
  EXPECT_THROW(TrainConfig::FromJson({{"dim", -1}}), std::invalid_argument);
  EXPECT_THROW(TrainConfig::FromJson({{"dim", 0}}), std::invalid_argument);
  EXPECT_THROW(TrainConfig::FromJson({{"lr", "fast"}}), std::invalid_argument);
  EXPECT_THROW(TrainConfig::FromJson({{"holdout", 1.0}}), std::invalid_argument);
  EXPECT_THROW(TrainConfig::FromJson({{"margin", 0.0}}), std::invalid_argument);
}

TEST(EmbIoTest, ExportShapeAndExactReload) {
  testing::TempDir dir("emb");
  TripleIndex index = ToyIndex();
  TrainConfig cfg;
  cfg.epochs = 3;
  auto result = Train(index, cfg);
  ExportModel(index, result.params, cfg, result.report, dir.path());

  auto entities = ReadTsv(dir.path() / "entities.tsv");
  ASSERT_EQ(entities.size(), 6u);
  for (const auto& row : entities) EXPECT_EQ(row.size(), 9u);
  EXPECT_EQ(entities[0][0], index.entities[0]);
  auto relations = ReadTsv(dir.path() / "relations.tsv");
  EXPECT_EQ(relations.size(), 3u);

  LoadedModel loaded = ImportModel(dir.path());
  EXPECT_EQ(loaded.params, result.params);
  EXPECT_EQ(loaded.entities, index.entities);
  EXPECT_EQ(loaded.config["margin"], 1.0);
  EXPECT_EQ(loaded.config["entities"], 6);
  EXPECT_EQ(loaded.config["facts"], 6);
  EXPECT_EQ(loaded.metrics["loss_curve"].size(), 3u);

  EXPECT_THROW(ImportModel(dir.path() / "missing"), EmbIoError);
  testing::WriteFile(dir.path() / "relations.tsv", "r\t1\t2\n");
  EXPECT_THROW(ImportModel(dir.path()), EmbIoError);
}

TEST(EmbIoTest, FormatRealRoundTrips) {
  for (double v : {0.1, -1.0 / 3.0, 1e-300, 123456789.123456789}) {
    EXPECT_EQ(std::stod(FormatReal(v)), v);
  }
}

}  // namespace
}  // namespace schemagate::embed
