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

#ifndef SCHEMAGATE_HARVEST_HARVESTER_HPP_
#define SCHEMAGATE_HARVEST_HARVESTER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "schemagate/catalog/catalog.hpp"
#include "schemagate/harvest/adapter.hpp"

namespace schemagate::harvest {

enum class OutcomeStatus { kStaged, kSkippedLicense, kSkippedFormat, kParseFailed };

std::string_view StatusName(OutcomeStatus status);

struct HarvestOutcome {
  HarvestEntry entry;
  OutcomeStatus status = OutcomeStatus::kStaged;
  std::string dataset;  // staged dataset name
  std::vector<catalog::Distribution> distributions;
  std::string diagnostic;
  std::optional<std::size_t> line;    // parse failures only
  std::optional<std::size_t> column;

  nlohmann::json ToJson() const;
};

struct HarvestOptions {
  // Entries for which this returns false are left out of the run.
  std::function<bool(const HarvestEntry&)> filter;
  std::uint64_t max_payload_bytes = 50ull * 1024 * 1024;
  std::size_t max_in_flight = 4;
  std::string actor = "harvester";
};

struct HarvestReport {
  std::string adapter;
  std::vector<HarvestOutcome> outcomes;  // one per processed entry
  std::vector<std::string> filtered;        // external ids left out
  std::vector<std::string> already_staged;  // external ids staged earlier

  std::size_t Count(OutcomeStatus status) const;
  nlohmann::json ToJson() const;
};

// The source failed mid-run; outcomes gathered so far are kept.
class HarvestAborted : public std::runtime_error {
 public:
  HarvestAborted(const std::string& message, HarvestReport partial)
      : std::runtime_error(message), partial_(std::move(partial)) {}
  const HarvestReport& partial() const { return partial_; }

 private:
  HarvestReport partial_;
};

// Lists the adapter's entries and, for each one kept by the filter and not
// staged before, checks the license, fetches and parses the payload and
// stages a pending dataset with N-Triples (format "rdf"), Turtle and CSV
// distributions. Per-entry failures become outcomes; only the source
// failing aborts the run. One run per adapter name at a time.
HarvestReport RunHarvest(catalog::Catalog& catalog, SourceAdapter& adapter,
                         const HarvestOptions& options = {});

}  // namespace schemagate::harvest

#endif  // SCHEMAGATE_HARVEST_HARVESTER_HPP_
