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

#ifndef SCHEMAGATE_ANALYTICS_INTERSECTIONS_HPP_
#define SCHEMAGATE_ANALYTICS_INTERSECTIONS_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "schemagate/schema/formal_context.hpp"

namespace schemagate::analytics {

inline constexpr std::size_t kMaxSelection = 64;
inline constexpr std::size_t kMaxLotusSets = 6;

class SelectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact Venn regions over a selection of entity types. Region keys are bit
// masks where bit i stands for selected[i]; only non-empty regions are kept.
struct IntersectionReport {
  std::vector<std::string> selected;
  std::map<std::string, std::size_t> set_sizes;
  std::map<std::uint64_t, std::size_t> regions;

  std::vector<std::string> Members(std::uint64_t mask) const;
  // '1'/'0' per selected etype, in selection order.
  std::string Pattern(std::uint64_t mask) const;
  std::size_t RegionTotal() const;
};

// Throws SelectionError for fewer than 2 or more than 64 etypes, duplicates
// or etypes that are not objects of `context`.
IntersectionReport ExactIntersections(const schema::FormalContext& context,
                                      const std::vector<std::string>& selected);

// Regions sorted by count descending, ties by member list.
std::vector<std::uint64_t> SortedRegions(const IntersectionReport& report);

// VIS document for a knowledge lotus: selected, set_sizes, regions,
// petals (exclusive count per etype) and bands (count per sharing
// cardinality 1..n). Throws SelectionError above 6 sets.
nlohmann::json ExportLotus(const IntersectionReport& report);

// VIS document for an UpSet plot: selected, set_sizes and the sorted
// region bars, each with its membership pattern.
nlohmann::json ExportUpset(const IntersectionReport& report);

}  // namespace schemagate::analytics

#endif  // SCHEMAGATE_ANALYTICS_INTERSECTIONS_HPP_
