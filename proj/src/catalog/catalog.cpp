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

#include "schemagate/catalog/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <mutex>
#include <sstream>

namespace schemagate::catalog {

namespace fs = std::filesystem;
using nlohmann::json;

ValidationFailed::ValidationFailed(ValidationResult result)
    : CatalogError("validation_failed",
                   result.errors.empty()
                       ? std::string("metadata validation failed")
                       : result.errors.front().field + ": " +
                             result.errors.front().message),
      result_(std::move(result)) {}

std::string NowTimestamp() {
  auto now = std::chrono::system_clock::now();
  auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                    now.time_since_epoch()).count();
  std::time_t secs = static_cast<std::time_t>(micros / 1000000);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%06lldZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec, static_cast<long long>(micros % 1000000));
  return buf;
}

namespace {

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError("io_error", "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteAtomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out || !(out << content) || !out.flush()) {
      throw CatalogError("io_error", "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw CatalogError("io_error", "cannot replace " + path.string());
}

std::string DefaultExtension(const std::string& format) {
  if (format == "rdf") return "nt";
  if (format == "cue") return "cue.csv";
  if (format == "fca") return "cxt";
  if (format == "vis") return "vis.json";
  if (format == "emb") return "emb";
  if (format.empty()) return "bin";
  return format;
}

std::uint64_t DirectorySize(const fs::path& dir) {
  std::uint64_t total = 0;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file()) total += entry.file_size();
  }
  return total;
}

std::uint64_t IdNumber(const std::string& id) {
  auto dash = id.rfind('-');
  if (dash == std::string::npos) return 0;
  try {
    return std::stoull(id.substr(dash + 1));
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

Catalog::Catalog(fs::path root, CatalogOptions options)
    : root_(std::move(root)), options_(std::move(options)) {
  std::error_code ec;
  fs::create_directories(root_ / "datasets", ec);
  if (ec) throw CatalogError("io_error", "cannot create store at " + root_.string());
  Load();
}

void Catalog::Load() {
  for (const auto& entry : fs::directory_iterator(root_ / "datasets")) {
    fs::path meta = entry.path() / "meta.json";
    if (!entry.is_directory() || !fs::exists(meta)) continue;
    try {
      DatasetRecord record = DatasetRecord::FromJson(json::parse(ReadFile(meta)));
      next_dataset_ = std::max(next_dataset_, IdNumber(record.id) + 1);
      records_[record.name] = std::move(record);
    } catch (const json::exception& e) {
      throw CatalogError("io_error", "corrupt " + meta.string() + ": " + e.what());
    }
  }
  if (fs::exists(root_ / "activity.jsonl")) {
    std::istringstream lines(ReadFile(root_ / "activity.jsonl"));
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      try {
        events_.push_back(ActivityEvent::FromJson(json::parse(line)));
      } catch (const json::exception& e) {
        throw CatalogError("io_error", std::string("corrupt activity log: ") + e.what());
      }
    }
  }
  if (fs::exists(root_ / "providers.json")) {
    for (const auto& doc : json::parse(ReadFile(root_ / "providers.json"))) {
      Provider p = Provider::FromJson(doc);
      providers_[p.name] = p;
    }
  }
  if (fs::exists(root_ / "catalogs.json")) {
    for (const auto& doc : json::parse(ReadFile(root_ / "catalogs.json"))) {
      SourceCatalog c = SourceCatalog::FromJson(doc);
      catalogs_[c.name] = c;
    }
  }
}

std::string Catalog::Now() const {
  return options_.clock ? options_.clock() : NowTimestamp();
}

Distribution Catalog::PlanDraft(const DatasetRecord& record,
                                const DistributionDraft& draft,
                                std::size_t ordinal) const {
  Distribution d = draft.meta;
  d.id = record.name + "-" + std::to_string(ordinal);
  d.dataset = record.name;
  if (d.created.empty()) d.created = Now();
  if (d.license.empty()) d.license = record.license_id;
  if (draft.payload || draft.payload_dir) {
    std::string ext = draft.extension.empty() ? DefaultExtension(d.format)
                                              : draft.extension;
    d.access_url = "datasets/" + record.name + "/" + d.id + "." + ext;
    if (draft.payload) {
      d.byte_size = draft.payload->size();
    } else {
      if (!fs::is_directory(*draft.payload_dir)) {
        throw CatalogError("io_error",
                           "payload directory " + draft.payload_dir->string() +
                               " does not exist");
      }
      d.byte_size = DirectorySize(*draft.payload_dir);
    }
  }
  return d;
}

void Catalog::WritePayload(const Distribution& planned,
                           const DistributionDraft& draft) {
  if (!draft.payload && !draft.payload_dir) return;
  fs::path target = root_ / planned.access_url;
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  if (draft.payload) {
    WriteAtomic(target, *draft.payload);
    return;
  }
  fs::remove_all(target, ec);
  fs::copy(*draft.payload_dir, target, fs::copy_options::recursive, ec);
  if (ec) throw CatalogError("io_error", "cannot copy payload to " + target.string());
}

void Catalog::WriteRecord(const DatasetRecord& record) {
  fs::path dir = root_ / "datasets" / record.name;
  std::error_code ec;
  fs::create_directories(dir, ec);
  WriteAtomic(dir / "meta.json", record.ToJson().dump(2) + "\n");
}

void Catalog::AppendEvent(ActivityEvent event) {
  event.seq = events_.size() + 1;
  std::ofstream out(root_ / "activity.jsonl", std::ios::binary | std::ios::app);
  if (!out || !(out << event.ToJson().dump() << '\n') || !out.flush()) {
    throw CatalogError("io_error", "cannot append to activity log");
  }
  events_.push_back(std::move(event));
}

void Catalog::WriteDirectories() {
  json providers = json::array();
  for (const auto& [name, p] : providers_) providers.push_back(p.ToJson());
  WriteAtomic(root_ / "providers.json", providers.dump(2) + "\n");
  json catalogs = json::array();
  for (const auto& [name, c] : catalogs_) catalogs.push_back(c.ToJson());
  WriteAtomic(root_ / "catalogs.json", catalogs.dump(2) + "\n");
}

void Catalog::WriteIndex() {
  TokenIndex index;
  for (const auto& [name, record] : records_) index.Add(record);
  WriteAtomic(root_ / "index.json", index.ToJson().dump(2) + "\n");
}

void Catalog::CheckDistributionLicense(const Distribution& distribution) const {
  if (distribution.license.empty() || options_.licenses.Allows(distribution.license)) {
    return;
  }
  throw CatalogError("license_denied", "distribution license '" +
                                           distribution.license + "' is not admitted");
}

DatasetRecord Catalog::UpsertDataset(DatasetRecord record,
                                     std::vector<DistributionDraft> drafts,
                                     const std::string& actor) {
  std::unique_lock lock(mutex_);
  const std::string now = Now();
  DatasetRecord merged = std::move(record);
  Action action;
  if (merged.id.empty()) {
    if (!IsSlug(merged.name)) {
      ValidationResult bad;
      bad.errors.push_back({"name", "name must be a URL slug ([a-z0-9_-])"});
      throw ValidationFailed(std::move(bad));
    }
    if (records_.contains(merged.name)) {
      throw CatalogError("conflict", "dataset name '" + merged.name + "' is taken");
    }
    char id[32];
    std::snprintf(id, sizeof id, "ds-%06llu",
                  static_cast<unsigned long long>(next_dataset_));
    merged.id = id;
    merged.version = 1;
    merged.state = DatasetState::kPending;
    merged.issued = now;
    merged.modified = now;
    merged.distributions.clear();
    action = Action::kCreated;
  } else {
    auto it = std::find_if(records_.begin(), records_.end(), [&](const auto& kv) {
      return kv.second.id == merged.id;
    });
    if (it == records_.end()) {
      throw CatalogError("not_found", "no dataset with id '" + merged.id + "'");
    }
    const DatasetRecord& existing = it->second;
    if (merged.name.empty()) merged.name = existing.name;
    if (merged.name != existing.name) {
      throw CatalogError("conflict", "dataset '" + existing.name +
                                         "' cannot be renamed to '" +
                                         merged.name + "'");
    }
    merged.version = existing.version + 1;
    merged.state = existing.state;
    merged.issued = existing.issued;
    merged.modified = now;
    if (merged.harvest_key.empty()) merged.harvest_key = existing.harvest_key;
    merged.distributions = existing.distributions;
    action = Action::kUpdated;
  }

  std::vector<Distribution> planned;
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    planned.push_back(
        PlanDraft(merged, drafts[i], merged.distributions.size() + i + 1));
  }
  std::vector<Distribution> all = merged.distributions;
  all.insert(all.end(), planned.begin(), planned.end());
  ValidationResult validation = ValidateMetadata(merged, all);
  if (!validation.ok()) throw ValidationFailed(std::move(validation));
  if (!options_.licenses.Allows(merged.license_id)) {
    throw CatalogError("license_denied", "license '" + merged.license_id +
                                             "' is not admitted");
  }
  for (const Distribution& d : planned) CheckDistributionLicense(d);

  for (std::size_t i = 0; i < drafts.size(); ++i) WritePayload(planned[i], drafts[i]);
  merged.distributions = std::move(all);
  WriteRecord(merged);
  if (action == Action::kCreated) ++next_dataset_;
  records_[merged.name] = merged;
  AppendEvent({0, now, actor, merged.name, action, merged.version, ""});
  WriteIndex();
  return merged;
}

Distribution Catalog::AddDistribution(const std::string& name,
                                      DistributionDraft draft,
                                      const std::string& actor) {
  std::unique_lock lock(mutex_);
  auto it = records_.find(name);
  if (it == records_.end()) throw CatalogError("not_found", "no dataset '" + name + "'");
  DatasetRecord record = it->second;
  Distribution planned = PlanDraft(record, draft, record.distributions.size() + 1);
  ValidationResult validation = ValidateMetadata(record, {planned});
  if (!validation.ok()) throw ValidationFailed(std::move(validation));
  CheckDistributionLicense(planned);
  WritePayload(planned, draft);
  const std::string now = Now();
  record.distributions.push_back(planned);
  record.version += 1;
  record.modified = now;
  WriteRecord(record);
  it->second = record;
  AppendEvent({0, now, actor, name, Action::kDistributionAdded, record.version,
               planned.id});
  return planned;
}

DatasetRecord Catalog::Review(const std::string& name, Decision decision,
                              const std::string& actor) {
  std::unique_lock lock(mutex_);
  auto it = records_.find(name);
  if (it == records_.end()) throw CatalogError("not_found", "no dataset '" + name + "'");
  DatasetRecord record = it->second;
  if (record.state != DatasetState::kPending) {
    throw CatalogError("invalid_state", "dataset '" + name + "' is " +
                                            std::string(StateName(record.state)) +
                                            ", not pending");
  }
  if (decision == Decision::kApprove) {
    ValidationResult validation = ValidateMetadata(record, record.distributions);
    if (!validation.ok()) throw ValidationFailed(std::move(validation));
    record.state = DatasetState::kPublished;
  } else {
    record.state = DatasetState::kRejected;
  }
  const std::string now = Now();
  record.version += 1;
  record.modified = now;
  WriteRecord(record);
  it->second = record;
  AppendEvent({0, now, actor, name, Action::kStateChanged, record.version,
               std::string(StateName(record.state))});
  return record;
}

std::optional<DatasetRecord> Catalog::Find(const std::string& name) const {
  std::shared_lock lock(mutex_);
  auto it = records_.find(name);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

std::optional<DatasetRecord> Catalog::FindByHarvestKey(const std::string& key) const {
  std::shared_lock lock(mutex_);
  for (const auto& [name, record] : records_) {
    if (!key.empty() && record.harvest_key == key) return record;
  }
  return std::nullopt;
}

std::vector<DatasetRecord> Catalog::Datasets() const {
  std::shared_lock lock(mutex_);
  std::vector<DatasetRecord> out;
  for (const auto& [name, record] : records_) out.push_back(record);
  return out;
}

std::vector<SearchHit> Catalog::Search(const SearchQuery& query) const {
  std::shared_lock lock(mutex_);
  std::vector<DatasetRecord> published;
  for (const auto& [name, record] : records_) {
    if (record.state == DatasetState::kPublished) published.push_back(record);
  }
  return SearchRecords(published, query);
}

std::vector<ActivityEvent> Catalog::Activity(
    const std::optional<std::string>& since,
    const std::optional<std::string>& dataset) const {
  std::shared_lock lock(mutex_);
  std::vector<ActivityEvent> out;
  for (auto it = events_.rbegin(); it != events_.rend(); ++it) {
    if (since && it->timestamp < *since) continue;
    if (dataset && it->dataset != *dataset) continue;
    out.push_back(*it);
  }
  return out;
}

void Catalog::UpsertProvider(Provider provider) {
  std::unique_lock lock(mutex_);
  if (provider.id.empty()) provider.id = provider.name;
  if (provider.title.empty()) provider.title = provider.name;
  providers_[provider.name] = std::move(provider);
  WriteDirectories();
}

void Catalog::UpsertSourceCatalog(SourceCatalog source) {
  std::unique_lock lock(mutex_);
  if (source.id.empty()) source.id = source.name;
  if (source.title.empty()) source.title = source.name;
  catalogs_[source.name] = std::move(source);
  WriteDirectories();
}

std::vector<Provider> Catalog::Providers() const {
  std::shared_lock lock(mutex_);
  std::vector<Provider> out;
  for (const auto& [name, p] : providers_) out.push_back(p);
  return out;
}

std::vector<SourceCatalog> Catalog::SourceCatalogs() const {
  std::shared_lock lock(mutex_);
  std::vector<SourceCatalog> out;
  for (const auto& [name, c] : catalogs_) out.push_back(c);
  return out;
}

fs::path Catalog::PayloadPath(const Distribution& distribution) const {
  return root_ / distribution.access_url;
}

std::string StoreDigest(const fs::path& root) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file()) files.push_back(fs::relative(entry.path(), root));
  }
  std::sort(files.begin(), files.end());
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&](std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash ^= c;
      hash *= 0x100000001b3ULL;
    }
    hash ^= 0xff;
    hash *= 0x100000001b3ULL;
  };
  for (const auto& rel : files) {
    mix(rel.generic_string());
    mix(ReadFile(root / rel));
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace schemagate::catalog
