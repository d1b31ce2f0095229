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

#ifndef SCHEMAGATE_HARVEST_ADAPTER_HPP_
#define SCHEMAGATE_HARVEST_ADAPTER_HPP_

#include <filesystem>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace schemagate::harvest {

struct HarvestEntry {
  std::string external_id;
  std::string title;
  std::string description;
  std::vector<std::string> keywords;
  std::string download_url;
  std::string license_id;
  std::string provider;
  std::string source_catalog;
  std::string format;  // declared, may be empty

  nlohmann::json ToJson() const;
};

struct Payload {
  std::string bytes;
  std::string format;  // declared or inferred from the download URL
};

// Adapter configuration problems (missing mappings, malformed index).
class AdapterConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The source itself cannot be reached; aborts a run.
class SourceUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SourceAdapter {
 public:
  virtual ~SourceAdapter() = default;
  virtual std::string name() const = 0;
  // Stable external ids, in a stable order.
  virtual std::vector<HarvestEntry> ListEntries() = 0;
  virtual Payload Fetch(const HarvestEntry& entry) = 0;
};

// Every *.ttl and *.nt file of a directory, by file name. A sidecar
// "<file>.json" may set title, description, keywords, license, provider
// and format; otherwise the adapter defaults apply.
class LocalDirectoryAdapter : public SourceAdapter {
 public:
  struct Options {
    std::string name = "local";
    std::filesystem::path directory;
    std::string default_license;
    std::string provider;
  };
  explicit LocalDirectoryAdapter(Options options);

  std::string name() const override { return options_.name; }
  std::vector<HarvestEntry> ListEntries() override;
  Payload Fetch(const HarvestEntry& entry) override;

 private:
  Options options_;
};

// Reads a JSON index document (local path, file:// or http:// URL) and
// maps each element of the array at `items` (a JSON pointer, root by
// default) through `field_map`: HarvestEntry field name -> JSON pointer
// inside the element. external_id and download_url must be mapped.
// Relative download URLs resolve against the index location.
class JsonIndexAdapter : public SourceAdapter {
 public:
  struct Config {
    std::string name;
    std::string index_url;
    std::string items;
    std::map<std::string, std::string> field_map;
    std::string default_license;

    // Keys: name, index_url, items, field_map, default_license.
    static Config FromJson(const nlohmann::json& doc);
  };
  explicit JsonIndexAdapter(Config config);

  std::string name() const override { return config_.name; }
  std::vector<HarvestEntry> ListEntries() override;
  Payload Fetch(const HarvestEntry& entry) override;

 private:
  std::string Resolve(const std::string& url) const;
  Config config_;
};

// Builds an adapter from a config file. {"adapter": "local", "name",
// "directory", "default_license", "provider"} or {"adapter": "json_index",
// ...JsonIndexAdapter::Config keys}. A config without "adapter" is a JSON
// index config. Relative paths resolve against the config file.
std::unique_ptr<SourceAdapter> AdapterFromConfigFile(
    const std::filesystem::path& path);

// Reads a local path, file:// URL or http:// URL.
std::string FetchUrl(const std::string& url);

}  // namespace schemagate::harvest

#endif  // SCHEMAGATE_HARVEST_ADAPTER_HPP_
