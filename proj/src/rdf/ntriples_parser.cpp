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

#include <cctype>

#include "cursor.hpp"
#include "schemagate/rdf/iri.hpp"
#include "schemagate/rdf/parser.hpp"

namespace schemagate::rdf {

namespace {

using internal::Cursor;

class NTriplesParser {
 public:
  explicit NTriplesParser(std::string_view input) : cur_(input) {}

  Graph Run() {
    while (!cur_.AtEnd()) {
      SkipBlanks();
      if (cur_.AtEnd()) break;
      char c = cur_.Peek();
      if (c == '\n' || c == '\r') {
        cur_.Next();
        continue;
      }
      if (c == '#') {
        SkipToEol();
        continue;
      }
      Line();
    }
    return std::move(graph_);
  }

 private:
  void SkipBlanks() {
    while (!cur_.AtEnd() && (cur_.Peek() == ' ' || cur_.Peek() == '\t')) {
      cur_.Next();
    }
  }

  void SkipToEol() {
    while (!cur_.AtEnd() && cur_.Peek() != '\n') cur_.Next();
  }

  void Line() {
    Term subject = SubjectOrObject(false);
    SkipBlanks();
    Term predicate = Iri();
    SkipBlanks();
    Term object = SubjectOrObject(true);
    SkipBlanks();
    cur_.Expect('.');
    SkipBlanks();
    if (cur_.Peek() == '#') SkipToEol();
    if (!cur_.AtEnd() && cur_.Peek() != '\n' && cur_.Peek() != '\r') {
      cur_.Fail("trailing content after statement");
    }
    graph_.Add(std::move(subject), std::move(predicate), std::move(object));
  }

  Term Iri() {
    if (cur_.Peek() != '<') cur_.Fail("expected absolute IRI in angle brackets");
    std::string iri = cur_.ReadIriRef();
    if (!IsAbsoluteIri(iri)) cur_.Fail("relative IRI <" + iri + "> not allowed");
    return Term::Iri(std::move(iri));
  }

  Term SubjectOrObject(bool allow_literal) {
    char c = cur_.Peek();
    if (c == '<') return Iri();
    if (cur_.LookingAt("_:")) return Term::Blank(blanks_.Named(cur_.ReadBlankLabel()));
    if (c == '"' && allow_literal) {
      std::string lexical = cur_.ReadString(false);
      if (cur_.Peek() == '@') return Term::Literal(lexical, cur_.ReadLangTag());
      if (cur_.LookingAt("^^")) {
        cur_.Skip(2);
        return Term::Literal(lexical, {}, Iri().value());
      }
      return Term::Literal(lexical);
    }
    cur_.Fail(allow_literal ? "expected IRI, blank node or literal"
                            : "expected IRI or blank node");
  }

  Cursor cur_;
  Graph graph_;
  internal::BlankLabeler blanks_;
};

}  // namespace

Graph ParseNTriples(std::string_view input) {
  return NTriplesParser(input).Run();
}

}  // namespace schemagate::rdf
