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

#include "schemagate/catalog/validation.hpp"

namespace schemagate::catalog {

namespace {

bool Blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

nlohmann::json IssuesJson(const std::vector<Issue>& issues) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& issue : issues) {
    out.push_back({{"field", issue.field}, {"message", issue.message}});
  }
  return out;
}

}  // namespace

nlohmann::json ValidationResult::ToJson() const {
  return {{"errors", IssuesJson(errors)}, {"warnings", IssuesJson(warnings)}};
}

ValidationResult ValidateMetadata(const DatasetRecord& record,
                                  const std::vector<Distribution>& distributions) {
  ValidationResult result;
  auto error = [&](std::string field, std::string message) {
    result.errors.push_back({std::move(field), std::move(message)});
  };
  auto warn = [&](std::string field, std::string message) {
    result.warnings.push_back({std::move(field), std::move(message)});
  };

  if (Blank(record.title)) error("title", "title is mandatory");
  if (Blank(record.description)) error("description", "description is mandatory");
  if (distributions.empty()) warn("distributions", "no distribution attached");
  if (record.keywords.empty()) warn("keywords", "no keyword given");
  if (Blank(record.publisher)) warn("publisher", "no publisher given");
  if (Blank(record.category)) warn("category", "no category given");

  for (std::size_t i = 0; i < distributions.size(); ++i) {
    const Distribution& d = distributions[i];
    std::string prefix = "distributions[" + std::to_string(i) + "].";
    if (Blank(d.access_url)) error(prefix + "access_url", "access url is mandatory");
    if (Blank(d.description)) warn(prefix + "description", "no description given");
    if (Blank(d.format)) {
      warn(prefix + "format", "no format given");
    } else if (!IsDistributionFormat(d.format)) {
      error(prefix + "format", "unsupported format '" + d.format + "'");
    }
    if (Blank(d.license)) warn(prefix + "license", "no license given");
  }
  return result;
}

LicensePolicy::LicensePolicy()
    : allowed_{"CC0-1.0", "CC-BY-4.0", "CC-BY-SA-4.0", "CC-BY-3.0", "CC-BY-SA-3.0"} {}

LicensePolicy::LicensePolicy(std::set<std::string> allowed)
    : allowed_(std::move(allowed)) {}

bool LicensePolicy::Allows(std::string_view license_id) const {
  if (license_id.empty()) return false;
  return allowed_.contains(std::string(license_id));
}

}  // namespace schemagate::catalog
