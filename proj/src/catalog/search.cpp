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

#include "schemagate/catalog/search.hpp"

#include <algorithm>

namespace schemagate::catalog {

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (c >= 'A' && c <= 'Z') {
      current += static_cast<char>(c - 'A' + 'a');
    } else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c >= 0x80) {
      current += ch;
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::size_t Levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

namespace {

std::vector<std::string> RecordTokens(const DatasetRecord& record) {
  std::vector<std::string> tokens;
  auto add = [&](std::string_view text) {
    for (auto& t : Tokenize(text)) tokens.push_back(std::move(t));
  };
  add(record.title);
  add(record.description);
  for (const auto& k : record.keywords) add(k);
  add(record.publisher);
  add(record.category);
  return tokens;
}

bool Near(std::string_view query, std::string_view token) {
  std::size_t gap = query.size() > token.size() ? query.size() - token.size()
                                                : token.size() - query.size();
  return gap <= kMaxEditDistance && Levenshtein(query, token) <= kMaxEditDistance;
}

}  // namespace

TokenIndex::TokenIndex(std::span<const DatasetRecord> records) {
  for (const auto& r : records) Add(r);
}

void TokenIndex::Add(const DatasetRecord& record) {
  for (auto& token : RecordTokens(record)) postings_[token].insert(record.name);
}

nlohmann::json TokenIndex::ToJson() const {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [token, names] : postings_) doc[token] = names;
  return doc;
}

std::vector<SearchHit> SearchRecords(std::span<const DatasetRecord> records,
                                     const SearchQuery& query) {
  std::vector<std::string> terms = Tokenize(query.text);
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());

  std::vector<SearchHit> hits;
  for (const auto& record : records) {
    if (!query.category.empty() && record.category != query.category) continue;
    if (!query.publisher.empty() && record.publisher != query.publisher) continue;
    SearchHit hit{record.name};
    if (!terms.empty()) {
      std::vector<std::string> tokens = RecordTokens(record);
      std::sort(tokens.begin(), tokens.end());
      tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
      for (const auto& term : terms) {
        if (std::binary_search(tokens.begin(), tokens.end(), term)) {
          ++hit.exact;
        } else if (query.fuzzy && term.size() >= kMinFuzzyTokenLength &&
                   std::any_of(tokens.begin(), tokens.end(),
                               [&](const std::string& t) { return Near(term, t); })) {
          ++hit.fuzzy;
        }
      }
      if (hit.exact == 0 && hit.fuzzy == 0) continue;
    }
    hits.push_back(std::move(hit));
  }
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.exact != b.exact) return a.exact > b.exact;
    if (a.fuzzy != b.fuzzy) return a.fuzzy > b.fuzzy;
    return a.name < b.name;
  });
  return hits;
}

}  // namespace schemagate::catalog
