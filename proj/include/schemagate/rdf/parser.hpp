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

#ifndef SCHEMAGATE_RDF_PARSER_HPP_
#define SCHEMAGATE_RDF_PARSER_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "schemagate/rdf/term.hpp"

namespace schemagate::rdf {

// Raised by both parsers. Lines and columns are 1-based; column counts
// bytes.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column,
             std::string token);

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

// Turtle subset: @prefix/@base (and the SPARQL-style PREFIX/BASE forms),
// prefixed names, IRIs, blank node labels and [] property lists, ';' and
// ',' lists, short and long string literals with language tags or ^^
// datatypes, numeric and boolean shorthand and the 'a' keyword. RDF
// collections are rejected. Blank nodes are relabeled b0, b1, ... in order
// of first appearance.
Graph ParseTurtle(std::string_view input);

// Line-oriented N-Triples. Blank nodes are relabeled like ParseTurtle.
Graph ParseNTriples(std::string_view input);

enum class RdfFormat { kTurtle, kNTriples };

// Maps "ttl", "turtle", "nt", "ntriples" (any case, with or without a
// leading dot) to a format. Throws std::invalid_argument otherwise.
RdfFormat RdfFormatFromName(std::string_view name);

Graph ParseGraph(std::string_view input, RdfFormat format);

}  // namespace schemagate::rdf

#endif  // SCHEMAGATE_RDF_PARSER_HPP_
