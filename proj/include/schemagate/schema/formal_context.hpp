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

#ifndef SCHEMAGATE_SCHEMA_FORMAL_CONTEXT_HPP_
#define SCHEMAGATE_SCHEMA_FORMAL_CONTEXT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schemagate/schema/schema_model.hpp"

namespace schemagate::schema {

// Binary incidence relation between entity types (objects, rows) and
// properties (attributes, columns). Rows and columns are sorted by IRI.
class FormalContext {
 public:
  FormalContext() = default;
  // Throws std::invalid_argument unless incidence.size() equals
  // objects.size() * attributes.size() and both name lists are strictly
  // increasing.
  FormalContext(std::vector<std::string> objects,
                std::vector<std::string> attributes,
                std::vector<std::uint8_t> incidence);

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  std::size_t rows() const { return objects_.size(); }
  std::size_t cols() const { return attributes_.size(); }

  bool Has(std::size_t row, std::size_t col) const {
    return incidence_[row * attributes_.size() + col] != 0;
  }
  void Set(std::size_t row, std::size_t col, bool value) {
    incidence_[row * attributes_.size() + col] = value ? 1 : 0;
  }

  std::optional<std::size_t> ObjectIndex(std::string_view iri) const;
  std::optional<std::size_t> AttributeIndex(std::string_view iri) const;

  std::size_t RowSum(std::size_t row) const;
  std::size_t ColumnSum(std::size_t col) const;

  friend bool operator==(const FormalContext&, const FormalContext&) = default;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<std::uint8_t> incidence_;
};

struct ContextOptions {
  // Keep property columns that no entity type owns.
  bool keep_empty_attributes = false;
};

FormalContext BuildFormalContext(const SchemaModel& model,
                                 const ContextOptions& options = {});

enum class ContextFormat { kCxt, kCsv };

ContextFormat ContextFormatFromName(std::string_view name);

// cxt: Burmeister format ("B", blank, |G|, |M|, blank, object names,
// attribute names, one X/. row per object). csv: leading empty cell plus
// attribute IRIs, then one 0/1 row per object.
std::string ExportContext(const FormalContext& context, ContextFormat format);

// Reads the Burmeister format written by ExportContext.
FormalContext ReadCxt(std::string_view text);

}  // namespace schemagate::schema

#endif  // SCHEMAGATE_SCHEMA_FORMAL_CONTEXT_HPP_
