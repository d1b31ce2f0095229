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

#ifndef SCHEMAGATE_CATALOG_CATALOG_HPP_
#define SCHEMAGATE_CATALOG_CATALOG_HPP_

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "schemagate/catalog/records.hpp"
#include "schemagate/catalog/search.hpp"
#include "schemagate/catalog/validation.hpp"

namespace schemagate::catalog {

// Base of every catalog failure. code() is a stable machine-readable tag:
// validation_failed, license_denied, conflict, not_found, invalid_state or
// io_error.
class CatalogError : public std::runtime_error {
 public:
  CatalogError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class ValidationFailed : public CatalogError {
 public:
  explicit ValidationFailed(ValidationResult result);
  const ValidationResult& result() const { return result_; }

 private:
  ValidationResult result_;
};

// A distribution to attach. The payload is either inline bytes or a
// directory copied into the store (EMB artifacts); access_url and byte_size
// are then assigned by the store.
struct DistributionDraft {
  Distribution meta;
  std::optional<std::string> payload;
  std::optional<std::filesystem::path> payload_dir;
  std::string extension;  // defaults from the format
};

struct CatalogOptions {
  LicensePolicy licenses;
  // ISO-8601 UTC timestamps; the system clock when unset.
  std::function<std::string()> clock;
};

enum class Decision { kApprove, kReject };

// File-system store:
//   datasets/{name}/meta.json   record and distribution metadata
//   datasets/{name}/{file}      distribution payloads
//   activity.jsonl              one event per line, append-only
//   providers.json, catalogs.json, index.json (token index, rebuildable)
// Writers are serialized; readers see committed states only.
class Catalog {
 public:
  explicit Catalog(std::filesystem::path root, CatalogOptions options = {});

  const std::filesystem::path& root() const { return root_; }
  const LicensePolicy& licenses() const { return options_.licenses; }

  // Creates the record when `record.id` is empty (state pending, version 1)
  // and otherwise updates the record with that id: metadata replaced,
  // drafts appended, version incremented. Exactly one event is appended.
  // Throws ValidationFailed, CatalogError(license_denied) or
  // CatalogError(conflict) on a slug collision.
  DatasetRecord UpsertDataset(DatasetRecord record,
                              std::vector<DistributionDraft> drafts,
                              const std::string& actor);

  Distribution AddDistribution(const std::string& name, DistributionDraft draft,
                               const std::string& actor);

  // pending -> published | rejected. Anything else is invalid_state.
  DatasetRecord Review(const std::string& name, Decision decision,
                       const std::string& actor);

  std::optional<DatasetRecord> Find(const std::string& name) const;
  std::optional<DatasetRecord> FindByHarvestKey(const std::string& key) const;
  // Every record, by name.
  std::vector<DatasetRecord> Datasets() const;
  // Published records only.
  std::vector<SearchHit> Search(const SearchQuery& query) const;
  // Newest first. `since` keeps events stamped at or after it.
  std::vector<ActivityEvent> Activity(
      const std::optional<std::string>& since = {},
      const std::optional<std::string>& dataset = {}) const;

  void UpsertProvider(Provider provider);
  void UpsertSourceCatalog(SourceCatalog source);
  std::vector<Provider> Providers() const;
  std::vector<SourceCatalog> SourceCatalogs() const;

  std::filesystem::path PayloadPath(const Distribution& distribution) const;

 private:
  void Load();
  std::string Now() const;
  Distribution PlanDraft(const DatasetRecord& record,
                         const DistributionDraft& draft, std::size_t ordinal) const;
  void CheckDistributionLicense(const Distribution& distribution) const;
  void WritePayload(const Distribution& planned, const DistributionDraft& draft);
  void WriteRecord(const DatasetRecord& record);
  void AppendEvent(ActivityEvent event);
  void WriteDirectories();
  void WriteIndex();

  std::filesystem::path root_;
  CatalogOptions options_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, DatasetRecord> records_;  // by name
  std::vector<ActivityEvent> events_;
  std::map<std::string, Provider> providers_;
  std::map<std::string, SourceCatalog> catalogs_;
  std::uint64_t next_dataset_ = 1;
};

std::string NowTimestamp();

// FNV-1a over every regular file below `root` (relative path and bytes, in
// path order). Equal digests mean equal store contents.
std::string StoreDigest(const std::filesystem::path& root);

}  // namespace schemagate::catalog

#endif  // SCHEMAGATE_CATALOG_CATALOG_HPP_
