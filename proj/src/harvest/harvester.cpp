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

#include "schemagate/harvest/harvester.hpp"

#include <future>
#include <map>
#include <memory>
#include <mutex>

#include "schemagate/rdf/parser.hpp"
#include "schemagate/rdf/serializer.hpp"
#include "schemagate/rdf/table.hpp"

namespace schemagate::harvest {

using nlohmann::json;

std::string_view StatusName(OutcomeStatus status) {
  switch (status) {
    case OutcomeStatus::kStaged: return "staged";
    case OutcomeStatus::kSkippedLicense: return "skipped_license";
    case OutcomeStatus::kSkippedFormat: return "skipped_format";
    case OutcomeStatus::kParseFailed: return "parse_failed";
  }
  return "staged";
}

json HarvestOutcome::ToJson() const {
  json dists = json::array();
  for (const auto& d : distributions) dists.push_back(d.ToJson());
  json doc = {{"external_id", entry.external_id},
              {"status", StatusName(status)},
              {"dataset", dataset},
              {"distributions", dists},
              {"diagnostic", diagnostic}};
  if (line) doc["line"] = *line;
  if (column) doc["column"] = *column;
  return doc;
}

std::size_t HarvestReport::Count(OutcomeStatus status) const {
  std::size_t n = 0;
  for (const auto& o : outcomes) n += o.status == status ? 1 : 0;
  return n;
}

json HarvestReport::ToJson() const {
  json outs = json::array();
  for (const auto& o : outcomes) outs.push_back(o.ToJson());
  return {{"adapter", adapter},
          {"outcomes", outs},
          {"filtered", filtered},
          {"already_staged", already_staged}};
}

namespace {

std::mutex& SourceMutex(const std::string& name) {
  static std::mutex guard;
  static std::map<std::string, std::unique_ptr<std::mutex>> mutexes;
  std::lock_guard lock(guard);
  auto& slot = mutexes[name];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

// Result of fetching and parsing one entry off the staging thread.
struct Prepared {
  std::optional<OutcomeStatus> failure;
  std::string diagnostic;
  std::optional<std::size_t> line;
  std::optional<std::size_t> column;
  rdf::Graph graph;
};

Prepared Prepare(SourceAdapter& adapter, const HarvestEntry& entry,
                 std::uint64_t max_bytes) {
  Prepared out;
  Payload payload = adapter.Fetch(entry);
  rdf::RdfFormat format;
  try {
    format = rdf::RdfFormatFromName(payload.format);
  } catch (const std::invalid_argument&) {
    out.failure = OutcomeStatus::kSkippedFormat;
    out.diagnostic = "unsupported format '" + payload.format + "'";
    return out;
  }
  if (payload.bytes.size() > max_bytes) {
    out.failure = OutcomeStatus::kSkippedFormat;
    out.diagnostic = "payload of " + std::to_string(payload.bytes.size()) +
                     " bytes exceeds the " + std::to_string(max_bytes) +
                     " byte limit";
    return out;
  }
  try {
    out.graph = rdf::ParseGraph(payload.bytes, format);
  } catch (const rdf::ParseError& e) {
    out.failure = OutcomeStatus::kParseFailed;
    out.diagnostic = "line " + std::to_string(e.line()) + ", column " +
                     std::to_string(e.column()) + ": " + e.message();
    out.line = e.line();
    out.column = e.column();
  }
  return out;
}

std::string Stem(const std::string& external_id) {
  for (std::string_view ext : {".ttl", ".nt"}) {
    if (external_id.size() > ext.size() &&
        external_id.compare(external_id.size() - ext.size(), ext.size(), ext) == 0) {
      return external_id.substr(0, external_id.size() - ext.size());
    }
  }
  return external_id;
}

std::string FreeName(const catalog::Catalog& catalog, const std::string& base) {
  std::string name = base.empty() ? "dataset" : base;
  std::string candidate = name;
  for (int n = 2; catalog.Find(candidate); ++n) {
    candidate = name + "-" + std::to_string(n);
  }
  return candidate;
}

std::vector<catalog::DistributionDraft> Serializations(const HarvestEntry& entry,
                                                       const rdf::Graph& graph) {
  auto draft = [&](std::string format, std::string label, std::string payload,
                   std::string ext) {
    catalog::DistributionDraft d;
    d.meta.format = std::move(format);
    d.meta.title = entry.title + " (" + label + ")";
    d.meta.description = label + " serialization of " + entry.title;
    d.meta.license = entry.license_id;
    d.payload = std::move(payload);
    d.extension = std::move(ext);
    return d;
  };
  std::vector<catalog::DistributionDraft> out;
  out.push_back(draft("rdf", "N-Triples",
                      rdf::SerializeGraph(graph, rdf::RdfFormat::kNTriples), "nt"));
  out.push_back(draft("ttl", "Turtle",
                      rdf::SerializeGraph(graph, rdf::RdfFormat::kTurtle), "ttl"));
  out.push_back(draft("csv", "CSV", rdf::TriplesToTable(graph).ToCsv(), "csv"));
  return out;
}

HarvestOutcome Stage(catalog::Catalog& catalog, const std::string& adapter,
                     const HarvestEntry& entry, const rdf::Graph& graph,
                     const std::string& actor) {
  if (!entry.provider.empty()) catalog.UpsertProvider({"", entry.provider, "", ""});
  if (!entry.source_catalog.empty()) {
    catalog.UpsertSourceCatalog({"", entry.source_catalog, "", "", "", ""});
  }
  catalog::DatasetRecord record;
  record.name = FreeName(catalog, catalog::Slugify(Stem(entry.external_id)));
  record.title = entry.title.empty() ? entry.external_id : entry.title;
  record.description = entry.description.empty()
                           ? "Vocabulary " + record.title + " harvested from " +
                                 (entry.source_catalog.empty() ? adapter
                                                               : entry.source_catalog) +
                                 "."
                           : entry.description;
  record.keywords = entry.keywords;
  record.publisher = entry.provider;
  record.source_catalog = entry.source_catalog;
  record.license_id = entry.license_id;
  record.harvest_key = adapter + ":" + entry.external_id;
  if (entry.download_url.starts_with("http://") ||
      entry.download_url.starts_with("https://")) {
    record.landing_page = entry.download_url;
  }
  catalog::DatasetRecord stored =
      catalog.UpsertDataset(std::move(record), Serializations(entry, graph), actor);
  HarvestOutcome outcome;
  outcome.entry = entry;
  outcome.status = OutcomeStatus::kStaged;
  outcome.dataset = stored.name;
  outcome.distributions = stored.distributions;
  outcome.diagnostic = std::to_string(graph.size()) + " triples";
  return outcome;
}

}  // namespace

HarvestReport RunHarvest(catalog::Catalog& catalog, SourceAdapter& adapter,
                         const HarvestOptions& options) {
  std::lock_guard run_lock(SourceMutex(adapter.name()));
  HarvestReport report;
  report.adapter = adapter.name();

  std::vector<HarvestEntry> entries;
  try {
    entries = adapter.ListEntries();
  } catch (const SourceUnavailable& e) {
    throw HarvestAborted(e.what(), report);
  }

  std::vector<HarvestEntry> work;
  for (auto& entry : entries) {
    if (options.filter && !options.filter(entry)) {
      report.filtered.push_back(entry.external_id);
    } else if (catalog.FindByHarvestKey(adapter.name() + ":" + entry.external_id)) {
      report.already_staged.push_back(entry.external_id);
    } else {
      work.push_back(std::move(entry));
    }
  }

  const std::size_t window = std::max<std::size_t>(1, options.max_in_flight);
  for (std::size_t start = 0; start < work.size(); start += window) {
    std::size_t end = std::min(work.size(), start + window);
    std::vector<std::future<Prepared>> pending(end - start);
    for (std::size_t i = start; i < end; ++i) {
      if (!catalog.licenses().Allows(work[i].license_id)) continue;
      pending[i - start] = std::async(std::launch::async, Prepare, std::ref(adapter),
                                      std::cref(work[i]), options.max_payload_bytes);
    }
    for (std::size_t i = start; i < end; ++i) {
      const HarvestEntry& entry = work[i];
      auto& future = pending[i - start];
      if (!future.valid()) {
        HarvestOutcome skipped;
        skipped.entry = entry;
        skipped.status = OutcomeStatus::kSkippedLicense;
        skipped.diagnostic = "license '" + entry.license_id + "' is not admitted";
        report.outcomes.push_back(std::move(skipped));
        continue;
      }
      Prepared prepared;
      try {
        prepared = future.get();
      } catch (const SourceUnavailable& e) {
        for (std::size_t j = i + 1; j < end; ++j) {
          if (pending[j - start].valid()) pending[j - start].wait();
        }
        throw HarvestAborted(e.what(), report);
      }
      if (prepared.failure) {
        HarvestOutcome failed;
        failed.entry = entry;
        failed.status = *prepared.failure;
        failed.diagnostic = prepared.diagnostic;
        failed.line = prepared.line;
        failed.column = prepared.column;
        report.outcomes.push_back(std::move(failed));
        continue;
      }
      report.outcomes.push_back(
          Stage(catalog, adapter.name(), entry, prepared.graph, options.actor));
    }
  }
  return report;
}

}  // namespace schemagate::harvest
