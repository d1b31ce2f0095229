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

#include "schemagate/catalog/records.hpp"

#include <algorithm>
#include <stdexcept>

namespace schemagate::catalog {

namespace {

using nlohmann::json;

std::string Str(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return "";
  if (!it->is_string()) {
    throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

std::vector<std::string> StrList(const json& doc, const char* key) {
  std::vector<std::string> out;
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw std::invalid_argument(std::string("field '") + key + "' must be a list");
  }
  for (const auto& item : *it) {
    if (!item.is_string()) {
      throw std::invalid_argument(std::string("field '") + key +
                                  "' must hold strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

template <typename T>
T Int(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return T{};
  if (!it->is_number_integer()) {
    throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
  }
  return it->get<T>();
}

void RequireObject(const json& doc, const char* what) {
  if (!doc.is_object()) {
    throw std::invalid_argument(std::string(what) + " must be a JSON object");
  }
}

}  // namespace

std::string_view StateName(DatasetState state) {
  switch (state) {
    case DatasetState::kPending: return "pending";
    case DatasetState::kPublished: return "published";
    case DatasetState::kRejected: return "rejected";
  }
  return "pending";
}

DatasetState StateFromName(std::string_view name) {
  if (name == "pending") return DatasetState::kPending;
  if (name == "published") return DatasetState::kPublished;
  if (name == "rejected") return DatasetState::kRejected;
  throw std::invalid_argument("unknown dataset state '" + std::string(name) + "'");
}

const std::vector<std::string>& DistributionFormats() {
  static const std::vector<std::string> formats = {"rdf", "ttl", "csv", "cue",
                                                   "fca", "vis", "emb"};
  return formats;
}

bool IsDistributionFormat(std::string_view format) {
  const auto& all = DistributionFormats();
  return std::find(all.begin(), all.end(), format) != all.end();
}

json Distribution::ToJson() const {
  return {{"id", id},
          {"dataset", dataset},
          {"access_url", access_url},
          {"format", format},
          {"license", license},
          {"byte_size", byte_size},
          {"description", description},
          {"title", title},
          {"created", created}};
}

Distribution Distribution::FromJson(const json& doc) {
  RequireObject(doc, "distribution");
  Distribution d;
  d.id = Str(doc, "id");
  d.dataset = Str(doc, "dataset");
  d.access_url = Str(doc, "access_url");
  d.format = Str(doc, "format");
  d.license = Str(doc, "license");
  d.byte_size = Int<std::uint64_t>(doc, "byte_size");
  d.description = Str(doc, "description");
  d.title = Str(doc, "title");
  d.created = Str(doc, "created");
  return d;
}

json DatasetRecord::ToJson() const {
  json dists = json::array();
  for (const auto& d : distributions) dists.push_back(d.ToJson());
  return {{"id", id},
          {"name", name},
          {"title", title},
          {"notes", description},
          {"tags", keywords},
          {"category", category},
          {"owner-org", publisher},
          {"author", creator},
          {"source", source_catalog},
          {"uri", landing_page},
          {"language", language},
          {"contact-uri", contact_uri},
          {"maintainer", maintainer},
          {"license-id", license_id},
          {"license-url", license_url},
          {"harvest-key", harvest_key},
          {"version", version},
          {"issued", issued},
          {"modified", modified},
          {"state", StateName(state)},
          {"distributions", dists}};
}

DatasetRecord DatasetRecord::FromJson(const json& doc) {
  RequireObject(doc, "dataset");
  DatasetRecord r;
  r.id = Str(doc, "id");
  r.name = Str(doc, "name");
  r.title = Str(doc, "title");
  r.description = Str(doc, "notes");
  r.keywords = StrList(doc, "tags");
  r.category = Str(doc, "category");
  r.publisher = Str(doc, "owner-org");
  r.creator = Str(doc, "author");
  r.source_catalog = Str(doc, "source");
  r.landing_page = Str(doc, "uri");
  r.language = Str(doc, "language");
  r.contact_uri = Str(doc, "contact-uri");
  r.maintainer = Str(doc, "maintainer");
  r.license_id = Str(doc, "license-id");
  r.license_url = Str(doc, "license-url");
  r.harvest_key = Str(doc, "harvest-key");
  r.version = Int<std::int64_t>(doc, "version");
  r.issued = Str(doc, "issued");
  r.modified = Str(doc, "modified");
  std::string state = Str(doc, "state");
  r.state = state.empty() ? DatasetState::kPending : StateFromName(state);
  if (auto it = doc.find("distributions"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw std::invalid_argument("distributions must be a list");
    for (const auto& d : *it) r.distributions.push_back(Distribution::FromJson(d));
  }
  return r;
}

json Provider::ToJson() const {
  return {{"id", id}, {"name", name}, {"title", title}, {"uri", uri}};
}

Provider Provider::FromJson(const json& doc) {
  RequireObject(doc, "provider");
  return {Str(doc, "id"), Str(doc, "name"), Str(doc, "title"), Str(doc, "uri")};
}

json SourceCatalog::ToJson() const {
  return {{"id", id},     {"name", name}, {"title", title},
          {"uri", uri},   {"logo", logo}, {"description", description}};
}

SourceCatalog SourceCatalog::FromJson(const json& doc) {
  RequireObject(doc, "catalog");
  return {Str(doc, "id"),  Str(doc, "name"), Str(doc, "title"),
          Str(doc, "uri"), Str(doc, "logo"), Str(doc, "description")};
}

std::string_view ActionName(Action action) {
  switch (action) {
    case Action::kCreated: return "created";
    case Action::kUpdated: return "updated";
    case Action::kDistributionAdded: return "distribution_added";
    case Action::kStateChanged: return "state_changed";
  }
  return "created";
}

Action ActionFromName(std::string_view name) {
  if (name == "created") return Action::kCreated;
  if (name == "updated") return Action::kUpdated;
  if (name == "distribution_added") return Action::kDistributionAdded;
  if (name == "state_changed") return Action::kStateChanged;
  throw std::invalid_argument("unknown activity action '" + std::string(name) + "'");
}

json ActivityEvent::ToJson() const {
  json doc = {{"seq", seq},
              {"timestamp", timestamp},
              {"actor", actor},
              {"dataset", dataset},
              {"action", ActionName(action)},
              {"version", version}};
  if (!detail.empty()) doc["detail"] = detail;
  return doc;
}

ActivityEvent ActivityEvent::FromJson(const json& doc) {
  RequireObject(doc, "activity event");
  ActivityEvent e;
  e.seq = Int<std::uint64_t>(doc, "seq");
  e.timestamp = Str(doc, "timestamp");
  e.actor = Str(doc, "actor");
  e.dataset = Str(doc, "dataset");
  e.action = ActionFromName(Str(doc, "action"));
  e.version = Int<std::int64_t>(doc, "version");
  e.detail = Str(doc, "detail");
  return e;
}

bool IsSlug(std::string_view name) {
  if (name.empty() || name.front() == '-' || name.front() == '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
  });
}

std::string Slugify(std::string_view text) {
  std::string out;
  bool gap = false;
  for (char c : text) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    bool keep = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    if (keep) {
      if (gap && !out.empty()) out += '-';
      out += c;
      gap = false;
    } else {
      gap = true;
    }
  }
  return out;
}

}  // namespace schemagate::catalog
