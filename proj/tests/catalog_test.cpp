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

#include <atomic>
#include <set>
#include <string>
#include <thread>

#include "gtest/gtest.h"
#include "schemagate/catalog/catalog.hpp"
#include "schemagate/catalog/search.hpp"
#include "schemagate/catalog/validation.hpp"
#include "test_util.hpp"

namespace schemagate::catalog {
namespace {

using testing::ReadFile;
using testing::TempDir;

DatasetRecord Complete(const std::string& name) {
  DatasetRecord r;
  r.name = name;
  r.title = "Sport ontology " + name;
  r.description = "Entity types and properties about athletes and teams.";
  r.keywords = {"sport", "athletes"};
  r.category = "sport";
  r.publisher = "fixture";
  r.license_id = "CC-BY-4.0";
  return r;
}

DistributionDraft Ttl(const std::string& body) {
  DistributionDraft d;
  d.meta.format = "ttl";
  d.meta.description = "Turtle source";
  d.payload = body;
  return d;
}

CatalogOptions FixedClock() {
  CatalogOptions options;
  auto tick = std::make_shared<std::atomic<int>>(0);
  options.clock = [tick] {
    char buf[40];
    std::snprintf(buf, sizeof buf, "2024-01-01T00:00:%02d.000000Z", tick->fetch_add(1) % 60);
    return std::string(buf);
  };
  return options;
}

TEST(ValidationTest, MandatoryAndRecommended) {
  DatasetRecord empty;
  Distribution nowhere;
  nowhere.format = "xlsx";
  auto result = ValidateMetadata(empty, {nowhere});
  std::set<std::string> errors;
  for (const auto& e : result.errors) errors.insert(e.field);
  EXPECT_EQ(errors, (std::set<std::string>{"title", "description",
                                           "distributions[0].access_url",
                                           "distributions[0].format"}));
  EXPECT_FALSE(result.ok());
  std::set<std::string> warnings;
  for (const auto& w : result.warnings) warnings.insert(w.field);
  EXPECT_TRUE(warnings.contains("keywords"));
  EXPECT_TRUE(warnings.contains("publisher"));
  EXPECT_TRUE(warnings.contains("distributions[0].license"));

  Distribution good;
  good.access_url = "http://example.org/x.ttl";
  good.format = "ttl";
  good.description = "x";
  good.license = "CC0-1.0";
  auto clean = ValidateMetadata(Complete("x"), {good});
  EXPECT_TRUE(clean.ok());
  EXPECT_TRUE(clean.warnings.empty());
  EXPECT_EQ(clean.ToJson()["errors"].size(), 0u);
  auto bare = ValidateMetadata(Complete("x"), {});
  ASSERT_EQ(bare.warnings.size(), 1u);
  EXPECT_EQ(bare.warnings[0].field, "distributions");
}

TEST(ValidationTest, LicensePolicy) {
  LicensePolicy policy;
  EXPECT_TRUE(policy.Allows("CC0-1.0"));
  EXPECT_TRUE(policy.Allows("CC-BY-SA-4.0"));
  EXPECT_FALSE(policy.Allows("proprietary"));
  EXPECT_FALSE(policy.Allows(""));
  LicensePolicy narrow({"ODbL-1.0"});
  EXPECT_TRUE(narrow.Allows("ODbL-1.0"));
  EXPECT_FALSE(narrow.Allows("CC0-1.0"));
}

TEST(RecordsTest, SlugsAndJson) {
  EXPECT_TRUE(IsSlug("sport-lite_2"));
  EXPECT_FALSE(IsSlug("Sport"));
  EXPECT_FALSE(IsSlug(""));
  EXPECT_FALSE(IsSlug("a b"));
  EXPECT_EQ(Slugify("FOAF Lite (v2)!"), "foaf-lite-v2");
  DatasetRecord r = Complete("round-trip");
  r.state = DatasetState::kPublished;
  r.version = 3;
  auto doc = r.ToJson();
  EXPECT_EQ(doc["notes"], r.description);
  EXPECT_EQ(doc["owner-org"], "fixture");
  auto back = DatasetRecord::FromJson(doc);
  EXPECT_EQ(back.ToJson(), doc);
  EXPECT_THROW(StateFromName("draft"), std::invalid_argument);
}

TEST(SearchTest, TokenizeAndDistance) {
  EXPECT_EQ(Tokenize("Hello, World-2024!"),
            (std::vector<std::string>{"hello", "world", "2024"}));
  EXPECT_EQ(Levenshtein("kitten", "sitting"), 3u);
  EXPECT_EQ(Levenshtein("", "abc"), 3u);
  EXPECT_EQ(Levenshtein("flaw", "lawn"), 2u);
}

TEST(SearchTest, ExactBeforeFuzzy) {
  std::vector<DatasetRecord> records = {Complete("a"), Complete("b"), Complete("c")};
  records[0].title = "Football clubs";
  records[1].title = "Footbal typo";
  records[1].keywords = {};
  records[1].description = "misc";
  records[2].title = "Music";
  records[2].description = "songs";
  records[2].keywords = {};
  records[2].category = "culture";
  auto exact = SearchRecords(records, {"football"});
  ASSERT_EQ(exact.size(), 1u);
  EXPECT_EQ(exact[0].name, "a");
  auto fuzzy = SearchRecords(records, {"football", true});
  ASSERT_EQ(fuzzy.size(), 2u);
  EXPECT_EQ(fuzzy[0].name, "a");
  EXPECT_EQ(fuzzy[1].name, "b");
  EXPECT_EQ(fuzzy[1].fuzzy, 1u);
  // Short query tokens never match fuzzily.
  EXPECT_TRUE(SearchRecords(records, {"son", true}).empty());
  EXPECT_EQ(SearchRecords(records, {"", false, "culture"}).size(), 1u);
  EXPECT_EQ(SearchRecords(records, {}).size(), 3u);
}

TEST(SearchTest, VocabularyCorpus) {
  std::vector<DatasetRecord> records = {Complete("foaf"), Complete("schema-org"),
                                        Complete("bbc-sport")};
  records[0].title = "FOAF";
  records[0].description = "Friend of a friend vocabulary.";
  records[0].keywords = {"people"};
  records[1].title = "Schema.org";
  records[1].description = "Shared vocabulary for structured data.";
  records[1].keywords = {"schema", "web"};
  records[2].title = "BBC Sport ontology";
  records[2].keywords = {"sport"};
  for (auto& r : records) r.description += " Terms.";
  auto exact = SearchRecords(records, {"schema"});
  ASSERT_FALSE(exact.empty());
  EXPECT_EQ(exact[0].name, "schema-org");
  EXPECT_TRUE(SearchRecords(records, {"shema", false}).empty());
  auto fuzzy = SearchRecords(records, {"shema", true});
  ASSERT_EQ(fuzzy.size(), 1u);
  EXPECT_EQ(fuzzy[0].name, "schema-org");
}

TEST(CatalogTest, FutureSinceIsEmpty) {
  TempDir dir("catalog-since");
  Catalog cat(dir.path(), FixedClock());
  cat.UpsertDataset(Complete("sport"), {Ttl("<a> <b> <c> .")}, "tester");
  EXPECT_FALSE(cat.Activity().empty());
  EXPECT_TRUE(cat.Activity(std::string("9999-01-01T00:00:00Z")).empty());
}

TEST(CatalogTest, CreateUpdateAndPersist) {
  TempDir dir("catalog");
  std::string first_id;
  {
    Catalog catalog(dir.path(), FixedClock());
    auto record = Complete("sport");
    record.state = DatasetState::kPublished;  // ignored on create
    auto created = catalog.UpsertDataset(record, {Ttl("<a> <b> <c> .\n")}, "alice");
    first_id = created.id;
    EXPECT_EQ(created.id, "ds-000001");
    EXPECT_EQ(created.version, 1);
    EXPECT_EQ(created.state, DatasetState::kPending);
    ASSERT_EQ(created.distributions.size(), 1u);
    const auto& dist = created.distributions[0];
    EXPECT_EQ(dist.access_url, "datasets/sport/sport-1.ttl");
    EXPECT_EQ(dist.license, "CC-BY-4.0");
    EXPECT_EQ(dist.byte_size, 14u);
    EXPECT_EQ(ReadFile(catalog.PayloadPath(dist)), "<a> <b> <c> .\n");

    created.title = "Renamed title";
    auto updated = catalog.UpsertDataset(created, {}, "bob");
    EXPECT_EQ(updated.version, 2);
    EXPECT_EQ(updated.distributions.size(), 1u);
    EXPECT_EQ(catalog.UpsertDataset(Complete("music"), {}, "alice").id, "ds-000002");
  }
  Catalog reopened(dir.path());
  auto sport = reopened.Find("sport");
  ASSERT_TRUE(sport.has_value());
  EXPECT_EQ(sport->id, first_id);
  EXPECT_EQ(sport->title, "Renamed title");
  EXPECT_EQ(sport->version, 2);
  EXPECT_EQ(reopened.Activity().size(), 3u);
  EXPECT_EQ(reopened.UpsertDataset(Complete("third"), {}, "carol").id, "ds-000003");
  auto names = reopened.Datasets();
  ASSERT_EQ(names.size(), 3u);
  EXPECT_EQ(names[0].name, "music");
}

TEST(CatalogTest, RejectionsLeaveTheStoreUntouched) {
  TempDir dir("reject");
  Catalog catalog(dir.path());
  catalog.UpsertDataset(Complete("taken"), {}, "alice");
  const std::string before = StoreDigest(dir.path());

  auto expect_code = [&](auto&& action, const std::string& code) {
    try {
      action();
      ADD_FAILURE() << "expected " << code;
    } catch (const CatalogError& e) {
      EXPECT_EQ(e.code(), code) << e.what();
    }
    EXPECT_EQ(StoreDigest(dir.path()), before) << code;
  };
  auto untitled = Complete("untitled");
  untitled.title = "";
  expect_code([&] { catalog.UpsertDataset(untitled, {Ttl("x")}, "a"); }, "validation_failed");
  auto closed = Complete("closed");
  closed.license_id = "proprietary";
  expect_code([&] { catalog.UpsertDataset(closed, {Ttl("x")}, "a"); }, "license_denied");
  auto mixed = Complete("mixed");
  auto draft = Ttl("x");
  draft.meta.license = "all-rights-reserved";
  expect_code([&] { catalog.UpsertDataset(mixed, {draft}, "a"); }, "license_denied");
  expect_code([&] { catalog.UpsertDataset(Complete("taken"), {}, "a"); }, "conflict");
  expect_code([&] { catalog.UpsertDataset(Complete("Bad Name"), {}, "a"); },
              "validation_failed");
  auto ghost = Complete("ghost");
  ghost.id = "ds-999999";
  expect_code([&] { catalog.UpsertDataset(ghost, {}, "a"); }, "not_found");
  auto rename = *catalog.Find("taken");
  rename.name = "other";
  expect_code([&] { catalog.UpsertDataset(rename, {}, "a"); }, "conflict");
  expect_code([&] { catalog.Review("nobody", Decision::kApprove, "a"); }, "not_found");
  DistributionDraft bad;
  bad.meta.format = "pdf";
  bad.payload = "x";
  expect_code([&] { catalog.AddDistribution("taken", bad, "a"); }, "validation_failed");
  try {
    catalog.UpsertDataset(untitled, {}, "a");
  } catch (const ValidationFailed& e) {
    EXPECT_EQ(e.result().errors[0].field, "title");
  }
}

TEST(CatalogTest, ReviewAndDistributions) {
  TempDir dir("review");
  Catalog catalog(dir.path(), FixedClock());
  catalog.UpsertDataset(Complete("sport"), {Ttl("x")}, "alice");
  EXPECT_TRUE(catalog.Search({"sport"}).empty());
  auto published = catalog.Review("sport", Decision::kApprove, "moderator");
  EXPECT_EQ(published.state, DatasetState::kPublished);
  EXPECT_EQ(published.version, 2);
  EXPECT_EQ(catalog.Search({"sport"}).size(), 1u);
  try {
    catalog.Review("sport", Decision::kReject, "moderator");
    FAIL();
  } catch (const CatalogError& e) {
    EXPECT_EQ(e.code(), "invalid_state");
  }
  DistributionDraft csv;
  csv.meta.format = "csv";
  csv.meta.description = "table";
  csv.payload = "a,b\r\n";
  auto added = catalog.AddDistribution("sport", csv, "job-runner");
  EXPECT_EQ(added.id, "sport-2");
  EXPECT_EQ(catalog.Find("sport")->version, 3);

  auto events = catalog.Activity();
  ASSERT_EQ(events.size(), 3u);
  EXPECT_EQ(events[0].action, Action::kDistributionAdded);
  EXPECT_EQ(events[0].detail, "sport-2");
  EXPECT_EQ(events[1].action, Action::kStateChanged);
  EXPECT_EQ(events[1].detail, "published");
  EXPECT_EQ(events[2].action, Action::kCreated);
  EXPECT_EQ(events[2].seq, 1u);
  EXPECT_EQ(catalog.Activity(events[1].timestamp).size(), 2u);
  EXPECT_TRUE(catalog.Activity({}, std::string("nobody")).empty());

  catalog.UpsertDataset(Complete("music"), {}, "alice");
  auto rejected = catalog.Review("music", Decision::kReject, "moderator");
  EXPECT_EQ(rejected.state, DatasetState::kRejected);
}

TEST(CatalogTest, ConcurrentWritersSerialize) {
  TempDir dir("concurrent");
  Catalog catalog(dir.path());
  const std::string id = catalog.UpsertDataset(Complete("shared"), {}, "seed").id;
  std::vector<std::thread> writers;
  for (int w = 0; w < 2; ++w) {
    writers.emplace_back([&, w] {
      for (int i = 0; i < 10; ++i) {
        auto record = Complete("shared");
        record.id = id;
        record.description = "writer " + std::to_string(w) + " step " + std::to_string(i);
        catalog.UpsertDataset(record, {Ttl("x")}, "writer-" + std::to_string(w));
      }
    });
  }
  for (auto& t : writers) t.join();
  auto record = catalog.Find("shared");
  EXPECT_EQ(record->version, 21);
  EXPECT_EQ(record->distributions.size(), 20u);
  std::set<std::string> ids;
  for (const auto& d : record->distributions) ids.insert(d.id);
  EXPECT_EQ(ids.size(), 20u);
  auto events = catalog.Activity();
  ASSERT_EQ(events.size(), 21u);
  std::set<std::int64_t> versions;
  for (const auto& e : events) versions.insert(e.version);
  EXPECT_EQ(versions.size(), 21u);
  // The log on disk agrees with memory.
  Catalog reopened(dir.path());
  EXPECT_EQ(reopened.Find("shared")->version, 21);
  EXPECT_EQ(reopened.Activity().size(), 21u);
}

TEST(CatalogTest, DirectoriesAndHarvestKeys) {
  TempDir dir("dirs");
  Catalog catalog(dir.path());
  catalog.UpsertProvider({"", "fixture", "", "http://example.org"});
  catalog.UpsertSourceCatalog({"", "fixture-dir", "Fixture", "", "", ""});
  auto record = Complete("harvested");
  record.harvest_key = "fixture-dir:foaf-lite.ttl";
  catalog.UpsertDataset(record, {}, "harvester");
  EXPECT_EQ(catalog.FindByHarvestKey("fixture-dir:foaf-lite.ttl")->name, "harvested");
  EXPECT_FALSE(catalog.FindByHarvestKey("").has_value());
  Catalog reopened(dir.path());
  ASSERT_EQ(reopened.Providers().size(), 1u);
  EXPECT_EQ(reopened.Providers()[0].title, "fixture");
  EXPECT_EQ(reopened.SourceCatalogs()[0].title, "Fixture");
}

TEST(CatalogTest, DigestTracksContent) {
  TempDir dir("digest");
  Catalog catalog(dir.path());
  std::string empty = StoreDigest(dir.path());
  catalog.UpsertDataset(Complete("one"), {}, "a");
  std::string after = StoreDigest(dir.path());
  EXPECT_NE(empty, after);
  EXPECT_EQ(after, StoreDigest(dir.path()));
  EXPECT_EQ(NowTimestamp().size(), 27u);
}

}  // namespace
}  // namespace schemagate::catalog
