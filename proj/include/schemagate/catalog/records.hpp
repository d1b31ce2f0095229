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

#ifndef SCHEMAGATE_CATALOG_RECORDS_HPP_
#define SCHEMAGATE_CATALOG_RECORDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace schemagate::catalog {

enum class DatasetState { kPending, kPublished, kRejected };

std::string_view StateName(DatasetState state);
DatasetState StateFromName(std::string_view name);

// Closed set of distribution formats.
const std::vector<std::string>& DistributionFormats();
bool IsDistributionFormat(std::string_view format);

struct Distribution {
  std::string id;
  std::string dataset;     // owning dataset name
  std::string access_url;  // store-relative path for stored payloads
  std::string format;      // one of DistributionFormats(), empty if unknown
  std::string license;
  std::uint64_t byte_size = 0;
  std::string description;
  std::string title;
  std::string created;

  nlohmann::json ToJson() const;
  static Distribution FromJson(const nlohmann::json& doc);
};

struct DatasetRecord {
  std::string id;
  std::string name;  // URL slug, unique
  std::string title;
  std::string description;
  std::vector<std::string> keywords;
  std::string category;
  std::string publisher;       // provider name
  std::string creator;
  std::string source_catalog;  // source catalog name
  std::string landing_page;
  std::string language;
  std::string contact_uri;
  std::string maintainer;
  std::string license_id;
  std::string license_url;
  std::string harvest_key;  // "<adapter>:<external id>" for harvested records
  std::int64_t version = 0;
  std::string issued;
  std::string modified;
  DatasetState state = DatasetState::kPending;
  std::vector<Distribution> distributions;

  // Field names follow the scraped-metadata vocabulary: notes, tags,
  // owner-org, license-id, source and so on.
  nlohmann::json ToJson() const;
  static DatasetRecord FromJson(const nlohmann::json& doc);
};

struct Provider {
  std::string id;
  std::string name;
  std::string title;
  std::string uri;

  nlohmann::json ToJson() const;
  static Provider FromJson(const nlohmann::json& doc);
};

struct SourceCatalog {
  std::string id;
  std::string name;
  std::string title;
  std::string uri;
  std::string logo;
  std::string description;

  nlohmann::json ToJson() const;
  static SourceCatalog FromJson(const nlohmann::json& doc);
};

enum class Action { kCreated, kUpdated, kDistributionAdded, kStateChanged };

std::string_view ActionName(Action action);
Action ActionFromName(std::string_view name);

struct ActivityEvent {
  std::uint64_t seq = 0;  // position in the log, 1-based
  std::string timestamp;
  std::string actor;
  std::string dataset;
  Action action = Action::kCreated;
  std::int64_t version = 0;  // dataset version after the event
  std::string detail;

  nlohmann::json ToJson() const;
  static ActivityEvent FromJson(const nlohmann::json& doc);
};

// True for non-empty strings of [a-z0-9_-] not starting with '-' or '_'.
bool IsSlug(std::string_view name);
// Lowercases and folds every run of other characters into one '-'.
std::string Slugify(std::string_view text);

}  // namespace schemagate::catalog

#endif  // SCHEMAGATE_CATALOG_RECORDS_HPP_
