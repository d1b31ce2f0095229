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

#ifndef SCHEMAGATE_ANALYTICS_CUES_HPP_
#define SCHEMAGATE_ANALYTICS_CUES_HPP_

#include <string>
#include <vector>

#include "schemagate/schema/formal_context.hpp"

namespace schemagate::analytics {

// Cue validity of property `attribute` for entity type `object`: the share
// of the property's owners that `object` represents, P(object | attribute).
// Zero when the object lacks the property or the property has no owner.
double CueValidity(const schema::FormalContext& context, std::size_t attribute,
                   std::size_t object);

// Name-based overload; throws std::invalid_argument for unknown IRIs.
double CueValidity(const schema::FormalContext& context,
                   const std::string& attribute, const std::string& object);

struct CueRow {
  std::string etype;
  std::size_t n_properties = 0;
  double cue_e = 0.0;   // summed cue validity over the etype's properties
  double cue_er = 0.0;  // cue_e / n_properties, 0 for property-less etypes
};

struct CueReport {
  std::vector<CueRow> rows;  // cue_e descending, ties by IRI

  // "etype,n_properties,cue_e,cue_er" with reals to 6 decimals.
  std::string ToCsv() const;
};

CueReport ComputeCues(const schema::FormalContext& context);

}  // namespace schemagate::analytics

#endif  // SCHEMAGATE_ANALYTICS_CUES_HPP_
