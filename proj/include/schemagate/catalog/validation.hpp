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

#ifndef SCHEMAGATE_CATALOG_VALIDATION_HPP_
#define SCHEMAGATE_CATALOG_VALIDATION_HPP_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "schemagate/catalog/records.hpp"

namespace schemagate::catalog {

struct Issue {
  std::string field;  // "description", "distributions[0].access_url", ...
  std::string message;
};

struct ValidationResult {
  std::vector<Issue> errors;    // missing mandatory metadata
  std::vector<Issue> warnings;  // missing recommended metadata

  bool ok() const { return errors.empty(); }
  nlohmann::json ToJson() const;
};

// Mandatory: dataset title and description, distribution access URL.
// Recommended: dataset distribution, keyword, publisher and category;
// distribution description, format and license. A format outside the
// closed set is an error.
ValidationResult ValidateMetadata(const DatasetRecord& record,
                                  const std::vector<Distribution>& distributions);

class LicensePolicy {
 public:
  // CC0-1.0, CC-BY-4.0, CC-BY-SA-4.0, CC-BY-3.0 and CC-BY-SA-3.0.
  LicensePolicy();
  explicit LicensePolicy(std::set<std::string> allowed);

  bool Allows(std::string_view license_id) const;
  const std::set<std::string>& allowed() const { return allowed_; }

 private:
  std::set<std::string> allowed_;
};

}  // namespace schemagate::catalog

#endif  // SCHEMAGATE_CATALOG_VALIDATION_HPP_
