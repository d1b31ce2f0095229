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

#ifndef SCHEMAGATE_TESTS_TEST_UTIL_HPP_
#define SCHEMAGATE_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "schemagate/embed/model.hpp"
#include "schemagate/schema/formal_context.hpp"

namespace schemagate::testing {

inline std::filesystem::path Fixture(const std::string& relative) {
  return std::filesystem::path(SCHEMAGATE_FIXTURES) / relative;
}

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

// Fresh directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("schemagate-test-" + tag + "-" + std::to_string(rd()) + "-" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Random object x attribute context with names o00.., a00.. and the given
// incidence density.
inline schema::FormalContext RandomContext(std::mt19937_64& rng, std::size_t max_rows,
                                           std::size_t max_cols, double density) {
  std::size_t rows = 1 + rng() % max_rows;
  std::size_t cols = 1 + rng() % max_cols;
  std::vector<std::string> objects, attributes;
  char buf[16];
  for (std::size_t i = 0; i < rows; ++i) {
    std::snprintf(buf, sizeof buf, "o%03zu", i);
    objects.push_back(buf);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    std::snprintf(buf, sizeof buf, "a%03zu", j);
    attributes.push_back(buf);
  }
  std::vector<std::uint8_t> incidence(rows * cols);
  for (auto& cell : incidence) {
    cell = static_cast<double>(rng() >> 11) * 0x1.0p-53 < density ? 1 : 0;
  }
  return schema::FormalContext(objects, attributes, incidence);
}

// Brute force over the incidence matrix: for each object, sum over every
// attribute of incidence / number of owners.
struct BruteCue {
  std::string etype;
  std::size_t n = 0;
  double cue_e = 0.0;
  double cue_er = 0.0;
};

inline std::vector<BruteCue> BruteForceCues(const schema::FormalContext& ctx) {
  std::vector<BruteCue> out;
  for (std::size_t c = 0; c < ctx.rows(); ++c) {
    BruteCue row{ctx.objects()[c]};
    for (std::size_t p = 0; p < ctx.cols(); ++p) {
      if (!ctx.Has(c, p)) continue;
      std::size_t owners = 0;
      for (std::size_t c2 = 0; c2 < ctx.rows(); ++c2) owners += ctx.Has(c2, p) ? 1 : 0;
      row.n += 1;
      row.cue_e += 1.0 / static_cast<double>(owners);
    }
    row.cue_er = row.n == 0 ? 0.0 : row.cue_e / static_cast<double>(row.n);
    out.push_back(row);
  }
  return out;
}

// Largest relative error between the analytic loss gradient and central
// finite differences (step eps) over every touched parameter.
inline double GradientError(embed::ModelParams params, const embed::Fact& pos,
                            const std::vector<embed::Fact>& negs,
                            const embed::TrainConfig& cfg, double eps = 1e-5) {
  embed::SparseGradient analytic;
  embed::FactLoss(params, pos, negs, cfg, &analytic);
  auto numeric = [&](double& slot) {
    double saved = slot;
    slot = saved + eps;
    double up = embed::FactLoss(params, pos, negs, cfg);
    slot = saved - eps;
    double down = embed::FactLoss(params, pos, negs, cfg);
    slot = saved;
    return (up - down) / (2 * eps);
  };
  auto lookup = [](const auto& rows, std::int32_t id, std::size_t d) {
    for (const auto& [key, row] : rows) {
      if (key == id) return row[d];
    }
    return 0.0;
  };
  std::set<std::int32_t> entities = {pos.head, pos.tail};
  std::set<std::int32_t> relations = {pos.relation};
  for (const auto& n : negs) {
    entities.insert(n.head);
    entities.insert(n.tail);
    relations.insert(n.relation);
  }
  double worst = 0.0;
  auto compare = [&](double a, double n) {
    double err = std::abs(a - n) / std::max({std::abs(a), std::abs(n), 1e-6});
    worst = std::max(worst, err);
  };
  for (auto e : entities) {
    for (std::size_t d = 0; d < params.dim; ++d) {
      double n = numeric(params.entity_vectors[e * params.dim + d]);
      compare(lookup(analytic.entities, e, d), n);
    }
  }
  for (auto r : relations) {
    for (std::size_t d = 0; d < params.dim; ++d) {
      double n = numeric(params.relation_vectors[r * params.dim + d]);
      compare(lookup(analytic.relations, r, d), n);
    }
  }
  return worst;
}

}  // namespace schemagate::testing

#endif  // SCHEMAGATE_TESTS_TEST_UTIL_HPP_
