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

#include "schemagate/schema/formal_context.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "schemagate/util/csv.hpp"

namespace schemagate::schema {

FormalContext::FormalContext(std::vector<std::string> objects,
                             std::vector<std::string> attributes,
                             std::vector<std::uint8_t> incidence)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      incidence_(std::move(incidence)) {
  if (incidence_.size() != objects_.size() * attributes_.size()) {
    throw std::invalid_argument("incidence size does not match |G| x |M|");
  }
  auto strictly_sorted = [](const std::vector<std::string>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) ==
           v.end();
  };
  if (!strictly_sorted(objects_) || !strictly_sorted(attributes_)) {
    throw std::invalid_argument(
        "context objects and attributes must be unique and sorted");
  }
}

namespace {

std::optional<std::size_t> IndexIn(const std::vector<std::string>& sorted,
                                   std::string_view iri) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), iri);
  if (it == sorted.end() || *it != iri) return std::nullopt;
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

std::optional<std::size_t> FormalContext::ObjectIndex(std::string_view iri) const {
  return IndexIn(objects_, iri);
}

std::optional<std::size_t> FormalContext::AttributeIndex(
    std::string_view iri) const {
  return IndexIn(attributes_, iri);
}

std::size_t FormalContext::RowSum(std::size_t row) const {
  std::size_t sum = 0;
  for (std::size_t c = 0; c < cols(); ++c) sum += Has(row, c) ? 1 : 0;
  return sum;
}

std::size_t FormalContext::ColumnSum(std::size_t col) const {
  std::size_t sum = 0;
  for (std::size_t r = 0; r < rows(); ++r) sum += Has(r, col) ? 1 : 0;
  return sum;
}

FormalContext BuildFormalContext(const SchemaModel& model,
                                 const ContextOptions& options) {
  std::vector<std::string> objects(model.etypes.begin(), model.etypes.end());
  std::vector<std::string> attributes;
  for (const std::string& p : model.properties) {
    auto it = model.domain_of.find(p);
    bool owned = it != model.domain_of.end() && !it->second.empty();
    if (owned || options.keep_empty_attributes) attributes.push_back(p);
  }
  std::vector<std::uint8_t> incidence(objects.size() * attributes.size(), 0);
  for (std::size_t col = 0; col < attributes.size(); ++col) {
    auto it = model.domain_of.find(attributes[col]);
    if (it == model.domain_of.end()) continue;
    for (const std::string& etype : it->second) {
      auto row = IndexIn(objects, etype);
      if (row) incidence[*row * attributes.size() + col] = 1;
    }
  }
  return FormalContext(std::move(objects), std::move(attributes),
                       std::move(incidence));
}

ContextFormat ContextFormatFromName(std::string_view name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "cxt" || lower == "fca") return ContextFormat::kCxt;
  if (lower == "csv") return ContextFormat::kCsv;
  throw std::invalid_argument("unknown FCA format '" + std::string(name) +
                              "' (expected cxt or csv)");
}

std::string ExportContext(const FormalContext& context, ContextFormat format) {
  std::string out;
  if (format == ContextFormat::kCxt) {
    out += "B\n\n";
    out += std::to_string(context.rows()) + "\n";
    out += std::to_string(context.cols()) + "\n\n";
    for (const std::string& o : context.objects()) out += o + "\n";
    for (const std::string& a : context.attributes()) out += a + "\n";
    for (std::size_t r = 0; r < context.rows(); ++r) {
      for (std::size_t c = 0; c < context.cols(); ++c) {
        out += context.Has(r, c) ? 'X' : '.';
      }
      out += '\n';
    }
    return out;
  }
  std::vector<std::string> header = {""};
  header.insert(header.end(), context.attributes().begin(),
                context.attributes().end());
  out += csv::Row(header);
  for (std::size_t r = 0; r < context.rows(); ++r) {
    std::vector<std::string> row = {context.objects()[r]};
    for (std::size_t c = 0; c < context.cols(); ++c) {
      row.push_back(context.Has(r, c) ? "1" : "0");
    }
    out += csv::Row(row);
  }
  return out;
}

FormalContext ReadCxt(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  std::size_t i = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (i >= lines.size()) {
      throw std::invalid_argument(std::string("cxt: missing ") + what);
    }
    return lines[i++];
  };
  if (next("header") != "B") throw std::invalid_argument("cxt: expected 'B'");
  if (!next("blank line").empty()) throw std::invalid_argument("cxt: expected blank line");
  std::size_t g = std::stoul(next("object count"));
  std::size_t m = std::stoul(next("attribute count"));
  if (!next("blank line").empty()) throw std::invalid_argument("cxt: expected blank line");
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  for (std::size_t k = 0; k < g; ++k) objects.push_back(next("object name"));
  for (std::size_t k = 0; k < m; ++k) attributes.push_back(next("attribute name"));
  std::vector<std::uint8_t> incidence;
  incidence.reserve(g * m);
  for (std::size_t k = 0; k < g; ++k) {
    const std::string& row = next("incidence row");
    if (row.size() != m) throw std::invalid_argument("cxt: incidence row width mismatch");
    for (char c : row) {
      if (c == 'X' || c == 'x') {
        incidence.push_back(1);
      } else if (c == '.') {
        incidence.push_back(0);
      } else {
        throw std::invalid_argument("cxt: invalid incidence character");
      }
    }
  }
  return FormalContext(std::move(objects), std::move(attributes),
                       std::move(incidence));
}

}  // namespace schemagate::schema
