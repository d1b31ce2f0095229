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

#include "schemagate/harvest/adapter.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "httplib.h"

namespace schemagate::harvest {

namespace fs = std::filesystem;
using nlohmann::json;

json HarvestEntry::ToJson() const {
  return {{"external_id", external_id},       {"title", title},
          {"description", description},       {"keywords", keywords},
          {"download_url", download_url},     {"license_id", license_id},
          {"provider", provider},             {"source_catalog", source_catalog},
          {"format", format}};
}

namespace {

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

bool IsUrl(std::string_view s) {
  return StartsWith(s, "http://") || StartsWith(s, "https://") ||
         StartsWith(s, "file://");
}

std::string ReadLocal(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SourceUnavailable("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string InferFormat(std::string_view location) {
  auto dot = location.rfind('.');
  if (dot == std::string_view::npos) return "";
  std::string ext(location.substr(dot + 1));
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext == "ttl" || ext == "nt") return ext;
  return ext;
}

std::string OptionalString(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return "";
  if (!it->is_string()) {
    throw AdapterConfigError(std::string("'") + key + "' must be a string");
  }
  return it->get<std::string>();
}

std::vector<std::string> Keywords(const json& value) {
  std::vector<std::string> out;
  if (value.is_array()) {
    for (const auto& item : value) {
      if (item.is_string()) out.push_back(item.get<std::string>());
    }
  } else if (value.is_string()) {
    std::stringstream parts(value.get<std::string>());
    std::string part;
    while (std::getline(parts, part, ',')) {
      auto b = part.find_first_not_of(' ');
      auto e = part.find_last_not_of(' ');
      if (b != std::string::npos) out.push_back(part.substr(b, e - b + 1));
    }
  }
  return out;
}

}  // namespace

std::string FetchUrl(const std::string& url) {
  if (StartsWith(url, "file://")) return ReadLocal(url.substr(7));
  if (StartsWith(url, "https://")) {
    throw SourceUnavailable("https is not supported by this build: " + url);
  }
  if (!StartsWith(url, "http://")) return ReadLocal(url);
  std::string rest = url.substr(7);
  auto slash = rest.find('/');
  std::string host = rest.substr(0, slash);
  std::string path = slash == std::string::npos ? "/" : rest.substr(slash);
  httplib::Client client("http://" + host);
  client.set_connection_timeout(10);
  client.set_read_timeout(60);
  auto response = client.Get(path);
  if (!response) {
    throw SourceUnavailable("cannot reach " + url + ": " +
                            httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw SourceUnavailable("GET " + url + " returned " +
                            std::to_string(response->status));
  }
  return response->body;
}

LocalDirectoryAdapter::LocalDirectoryAdapter(Options options)
    : options_(std::move(options)) {}

std::vector<HarvestEntry> LocalDirectoryAdapter::ListEntries() {
  if (!fs::is_directory(options_.directory)) {
    throw SourceUnavailable("no such directory " + options_.directory.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(options_.directory)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    if (ext == ".ttl" || ext == ".nt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<HarvestEntry> entries;
  for (const auto& file : files) {
    HarvestEntry e;
    e.external_id = file.filename().string();
    e.title = file.stem().string();
    e.download_url = file.string();
    e.license_id = options_.default_license;
    e.provider = options_.provider;
    e.source_catalog = options_.name;
    e.format = InferFormat(e.external_id);
    fs::path sidecar = file;
    sidecar += ".json";
    if (fs::exists(sidecar)) {
      json meta;
      try {
        meta = json::parse(ReadLocal(sidecar));
      } catch (const json::exception& ex) {
        throw AdapterConfigError("malformed sidecar " + sidecar.string() + ": " +
                                 ex.what());
      }
      if (!meta.is_object()) {
        throw AdapterConfigError("sidecar " + sidecar.string() + " is not an object");
      }
      if (auto v = OptionalString(meta, "title"); !v.empty()) e.title = v;
      if (auto v = OptionalString(meta, "description"); !v.empty()) e.description = v;
      if (auto v = OptionalString(meta, "license"); !v.empty()) e.license_id = v;
      if (auto v = OptionalString(meta, "provider"); !v.empty()) e.provider = v;
      if (auto v = OptionalString(meta, "format"); !v.empty()) e.format = v;
      if (meta.contains("keywords")) e.keywords = Keywords(meta["keywords"]);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

Payload LocalDirectoryAdapter::Fetch(const HarvestEntry& entry) {
  return {ReadLocal(entry.download_url), entry.format};
}

namespace {

const std::set<std::string>& EntryFields() {
  static const std::set<std::string> fields = {
      "external_id", "title",    "description",    "keywords", "download_url",
      "license_id",  "provider", "source_catalog", "format"};
  return fields;
}

}  // namespace

JsonIndexAdapter::Config JsonIndexAdapter::Config::FromJson(const json& doc) {
  if (!doc.is_object()) throw AdapterConfigError("adapter config must be an object");
  Config cfg;
  cfg.name = OptionalString(doc, "name");
  cfg.index_url = OptionalString(doc, "index_url");
  cfg.items = OptionalString(doc, "items");
  cfg.default_license = OptionalString(doc, "default_license");
  if (cfg.name.empty()) throw AdapterConfigError("adapter config needs a name");
  if (cfg.index_url.empty()) throw AdapterConfigError("adapter config needs index_url");
  auto map = doc.find("field_map");
  if (map == doc.end() || !map->is_object()) {
    throw AdapterConfigError("adapter config needs a field_map object");
  }
  for (const auto& [field, pointer] : map->items()) {
    if (!pointer.is_string()) {
      throw AdapterConfigError("field_map." + field + " must be a JSON pointer");
    }
    cfg.field_map[field] = pointer.get<std::string>();
  }
  return cfg;
}

JsonIndexAdapter::JsonIndexAdapter(Config config) : config_(std::move(config)) {
  for (const auto& [field, pointer] : config_.field_map) {
    if (!EntryFields().contains(field)) {
      throw AdapterConfigError("field_map names unknown entry field '" + field + "'");
    }
    try {
      json::json_pointer check(pointer);
    } catch (const json::exception&) {
      throw AdapterConfigError("field_map." + field + " is not a JSON pointer: '" +
                               pointer + "'");
    }
  }
  for (const char* required : {"external_id", "download_url"}) {
    if (!config_.field_map.contains(required)) {
      throw AdapterConfigError(std::string("field_map must map ") + required);
    }
  }
}

std::string JsonIndexAdapter::Resolve(const std::string& url) const {
  if (IsUrl(url) || fs::path(url).is_absolute()) return url;
  const std::string& base = config_.index_url;
  auto slash = base.rfind('/');
  if (slash == std::string::npos) return url;
  return base.substr(0, slash + 1) + url;
}

std::vector<HarvestEntry> JsonIndexAdapter::ListEntries() {
  json index;
  try {
    index = json::parse(FetchUrl(config_.index_url));
  } catch (const json::exception& e) {
    throw AdapterConfigError("malformed index " + config_.index_url + ": " + e.what());
  }
  const json* items = &index;
  if (!config_.items.empty()) {
    json::json_pointer pointer(config_.items);
    if (!index.contains(pointer)) {
      throw AdapterConfigError("index has nothing at " + config_.items);
    }
    items = &index.at(pointer);
  }
  if (!items->is_array()) throw AdapterConfigError("index items are not an array");

  std::vector<HarvestEntry> entries;
  for (std::size_t i = 0; i < items->size(); ++i) {
    const json& element = (*items)[i];
    auto lookup = [&](const std::string& field) -> const json* {
      auto it = config_.field_map.find(field);
      if (it == config_.field_map.end()) return nullptr;
      json::json_pointer pointer(it->second);
      if (!element.contains(pointer)) return nullptr;
      return &element.at(pointer);
    };
    auto text = [&](const std::string& field) -> std::string {
      const json* v = lookup(field);
      if (v == nullptr || v->is_null()) return "";
      if (v->is_string()) return v->get<std::string>();
      return v->dump();
    };
    HarvestEntry e;
    e.external_id = text("external_id");
    e.download_url = text("download_url");
    if (e.external_id.empty() || e.download_url.empty()) {
      throw AdapterConfigError("index element " + std::to_string(i) +
                               " lacks external_id or download_url");
    }
    e.download_url = Resolve(e.download_url);
    e.title = text("title");
    if (e.title.empty()) e.title = e.external_id;
    e.description = text("description");
    if (const json* k = lookup("keywords")) e.keywords = Keywords(*k);
    e.license_id = text("license_id");
    if (e.license_id.empty()) e.license_id = config_.default_license;
    e.provider = text("provider");
    e.source_catalog = text("source_catalog");
    if (e.source_catalog.empty()) e.source_catalog = config_.name;
    e.format = text("format");
    if (e.format.empty()) e.format = InferFormat(e.download_url);
    entries.push_back(std::move(e));
  }
  return entries;
}

Payload JsonIndexAdapter::Fetch(const HarvestEntry& entry) {
  return {FetchUrl(entry.download_url), entry.format};
}

std::unique_ptr<SourceAdapter> AdapterFromConfigFile(const fs::path& path) {
  json doc;
  try {
    doc = json::parse(ReadLocal(path));
  } catch (const json::exception& e) {
    throw AdapterConfigError("malformed adapter config " + path.string() + ": " +
                             e.what());
  } catch (const SourceUnavailable& e) {
    throw AdapterConfigError(e.what());
  }
  if (!doc.is_object()) throw AdapterConfigError("adapter config must be an object");
  fs::path base = path.parent_path();
  auto local = [&](const std::string& p) {
    if (p.empty() || IsUrl(p) || fs::path(p).is_absolute()) return p;
    return (base / p).string();
  };
  std::string kind = OptionalString(doc, "adapter");
  if (kind == "local") {
    LocalDirectoryAdapter::Options options;
    options.name = OptionalString(doc, "name");
    if (options.name.empty()) options.name = "local";
    std::string dir = OptionalString(doc, "directory");
    if (dir.empty()) throw AdapterConfigError("local adapter needs a directory");
    options.directory = local(dir);
    options.default_license = OptionalString(doc, "default_license");
    options.provider = OptionalString(doc, "provider");
    return std::make_unique<LocalDirectoryAdapter>(std::move(options));
  }
  if (!kind.empty() && kind != "json_index") {
    throw AdapterConfigError("unknown adapter kind '" + kind + "'");
  }
  JsonIndexAdapter::Config cfg = JsonIndexAdapter::Config::FromJson(doc);
  cfg.index_url = local(cfg.index_url);
  return std::make_unique<JsonIndexAdapter>(std::move(cfg));
}

}  // namespace schemagate::harvest
