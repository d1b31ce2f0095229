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

#include "schemagate/analytics/cues.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "schemagate/util/csv.hpp"

namespace schemagate::analytics {

double CueValidity(const schema::FormalContext& context, std::size_t attribute,
                   std::size_t object) {
  if (!context.Has(object, attribute)) return 0.0;
  std::size_t owners = context.ColumnSum(attribute);
  return owners == 0 ? 0.0 : 1.0 / static_cast<double>(owners);
}

double CueValidity(const schema::FormalContext& context,
                   const std::string& attribute, const std::string& object) {
  auto col = context.AttributeIndex(attribute);
  auto row = context.ObjectIndex(object);
  if (!col) throw std::invalid_argument("unknown attribute <" + attribute + ">");
  if (!row) throw std::invalid_argument("unknown object <" + object + ">");
  return CueValidity(context, *col, *row);
}

CueReport ComputeCues(const schema::FormalContext& context) {
  std::vector<std::size_t> owners(context.cols());
  for (std::size_t c = 0; c < context.cols(); ++c) {
    owners[c] = context.ColumnSum(c);
  }
  CueReport report;
  report.rows.reserve(context.rows());
  for (std::size_t r = 0; r < context.rows(); ++r) {
    CueRow row;
    row.etype = context.objects()[r];
    for (std::size_t c = 0; c < context.cols(); ++c) {
      if (!context.Has(r, c)) continue;
      ++row.n_properties;
      row.cue_e += 1.0 / static_cast<double>(owners[c]);
    }
    row.cue_er = row.n_properties == 0
                     ? 0.0
                     : row.cue_e / static_cast<double>(row.n_properties);
    report.rows.push_back(std::move(row));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const CueRow& a, const CueRow& b) {
                     if (a.cue_e != b.cue_e) return a.cue_e > b.cue_e;
                     return a.etype < b.etype;
                   });
  return report;
}

std::string CueReport::ToCsv() const {
  std::string out = csv::Row({"etype", "n_properties", "cue_e", "cue_er"});
  char buf[64];
  for (const CueRow& row : rows) {
    std::vector<std::string> fields = {row.etype, std::to_string(row.n_properties)};
    std::snprintf(buf, sizeof(buf), "%.6f", row.cue_e);
    fields.emplace_back(buf);
    std::snprintf(buf, sizeof(buf), "%.6f", row.cue_er);
    fields.emplace_back(buf);
    out += csv::Row(fields);
  }
  return out;
}

}  // namespace schemagate::analytics
