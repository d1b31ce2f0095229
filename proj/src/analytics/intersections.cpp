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

#include "schemagate/analytics/intersections.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace schemagate::analytics {

std::vector<std::string> IntersectionReport::Members(std::uint64_t mask) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (mask & (std::uint64_t{1} << i)) out.push_back(selected[i]);
  }
  return out;
}

std::string IntersectionReport::Pattern(std::uint64_t mask) const {
  std::string out;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    out += (mask & (std::uint64_t{1} << i)) ? '1' : '0';
  }
  return out;
}

std::size_t IntersectionReport::RegionTotal() const {
  std::size_t total = 0;
  for (const auto& [mask, count] : regions) total += count;
  return total;
}

IntersectionReport ExactIntersections(const schema::FormalContext& context,
                                      const std::vector<std::string>& selected) {
  if (selected.size() < 2) {
    throw SelectionError("need at least 2 etypes to intersect, got " +
                         std::to_string(selected.size()));
  }
  if (selected.size() > kMaxSelection) {
    throw SelectionError("at most " + std::to_string(kMaxSelection) +
                         " etypes can be intersected, got " +
                         std::to_string(selected.size()));
  }
  std::set<std::string> seen;
  std::vector<std::size_t> rows;
  for (const std::string& etype : selected) {
    if (!seen.insert(etype).second) {
      throw SelectionError("etype selected twice: <" + etype + ">");
    }
    auto row = context.ObjectIndex(etype);
    if (!row) throw SelectionError("unknown etype <" + etype + ">");
    rows.push_back(*row);
  }

  IntersectionReport report;
  report.selected = selected;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    report.set_sizes[selected[i]] = context.RowSum(rows[i]);
  }
  for (std::size_t c = 0; c < context.cols(); ++c) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (context.Has(rows[i], c)) mask |= std::uint64_t{1} << i;
    }
    if (mask != 0) ++report.regions[mask];
  }
  return report;
}

std::vector<std::uint64_t> SortedRegions(const IntersectionReport& report) {
  std::vector<std::uint64_t> masks;
  for (const auto& [mask, count] : report.regions) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [&](std::uint64_t a, std::uint64_t b) {
    std::size_t ca = report.regions.at(a);
    std::size_t cb = report.regions.at(b);
    if (ca != cb) return ca > cb;
    return report.Members(a) < report.Members(b);
  });
  return masks;
}

namespace {

nlohmann::json BaseDocument(const IntersectionReport& report) {
  nlohmann::json doc;
  doc["selected"] = report.selected;
  doc["set_sizes"] = report.set_sizes;
  nlohmann::json regions = nlohmann::json::array();
  for (std::uint64_t mask : SortedRegions(report)) {
    regions.push_back({{"members", report.Members(mask)},
                       {"pattern", report.Pattern(mask)},
                       {"count", report.regions.at(mask)}});
  }
  doc["regions"] = std::move(regions);
  return doc;
}

}  // namespace

nlohmann::json ExportLotus(const IntersectionReport& report) {
  if (report.selected.size() > kMaxLotusSets) {
    throw SelectionError("knowledge lotuses support at most " +
                         std::to_string(kMaxLotusSets) + " sets, got " +
                         std::to_string(report.selected.size()) +
                         "; use the UpSet export instead");
  }
  nlohmann::json doc = BaseDocument(report);
  doc["mode"] = "lotus";
  nlohmann::json petals = nlohmann::json::object();
  for (std::size_t i = 0; i < report.selected.size(); ++i) {
    auto it = report.regions.find(std::uint64_t{1} << i);
    petals[report.selected[i]] = it == report.regions.end() ? 0 : it->second;
  }
  doc["petals"] = std::move(petals);
  std::vector<std::size_t> bands(report.selected.size() + 1, 0);
  for (const auto& [mask, count] : report.regions) {
    bands[static_cast<std::size_t>(std::popcount(mask))] += count;
  }
  nlohmann::json band_doc = nlohmann::json::object();
  for (std::size_t k = 1; k < bands.size(); ++k) {
    band_doc[std::to_string(k)] = bands[k];
  }
  doc["bands"] = std::move(band_doc);
  return doc;
}

nlohmann::json ExportUpset(const IntersectionReport& report) {
  nlohmann::json doc = BaseDocument(report);
  doc["mode"] = "upset";
  return doc;
}

}  // namespace schemagate::analytics
