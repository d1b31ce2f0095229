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

#ifndef SCHEMAGATE_CATALOG_SEARCH_HPP_
#define SCHEMAGATE_CATALOG_SEARCH_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "schemagate/catalog/records.hpp"

namespace schemagate::catalog {

inline constexpr std::size_t kMaxEditDistance = 2;
inline constexpr std::size_t kMinFuzzyTokenLength = 4;

// Lowercased runs of ASCII letters and digits; bytes >= 0x80 count as
// letters so UTF-8 words stay whole.
std::vector<std::string> Tokenize(std::string_view text);

std::size_t Levenshtein(std::string_view a, std::string_view b);

// Token -> names of the datasets whose title, description, keywords,
// publisher or category contain it.
class TokenIndex {
 public:
  TokenIndex() = default;
  explicit TokenIndex(std::span<const DatasetRecord> records);

  void Add(const DatasetRecord& record);
  const std::map<std::string, std::set<std::string>>& postings() const {
    return postings_;
  }
  nlohmann::json ToJson() const;

 private:
  std::map<std::string, std::set<std::string>> postings_;
};

struct SearchQuery {
  std::string text;
  bool fuzzy = false;
  std::string category;   // exact match when non-empty
  std::string publisher;  // exact match when non-empty
};

struct SearchHit {
  std::string name;
  std::size_t exact = 0;  // query tokens matched verbatim
  std::size_t fuzzy = 0;  // further query tokens matched within distance 2
};

// A record matches when at least one query token does. Exact matches rank
// above fuzzy ones; ties break by name. A query without tokens lists every
// record passing the filters, by name.
std::vector<SearchHit> SearchRecords(std::span<const DatasetRecord> records,
                                     const SearchQuery& query);

}  // namespace schemagate::catalog

#endif  // SCHEMAGATE_CATALOG_SEARCH_HPP_
