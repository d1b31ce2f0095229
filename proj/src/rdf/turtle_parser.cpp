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
#include <optional>

#include "cursor.hpp"
#include "schemagate/rdf/iri.hpp"
#include "schemagate/rdf/parser.hpp"

namespace schemagate::rdf {

ParseError::ParseError(std::string message, std::size_t line,
                       std::size_t column, std::string token)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message + " near '" +
                         token + "'"),
      message_(std::move(message)),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

namespace {

using internal::Cursor;
using internal::IsNameByte;

bool IsDelimiter(char c) {
  return c == '\0' || std::isspace(static_cast<unsigned char>(c)) ||
         c == '<' || c == '[' || c == '"' || c == '\'' ||
         c == '#' || c == ';' || c == ',' || c == '.' || c == ']' ||
         c == '(' || c == ')';
}

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view input) : cur_(input) {}

  Graph Run() {
    while (true) {
      SkipWs();
      if (cur_.AtEnd()) break;
      if (cur_.Peek() == '@') {
        AtDirective();
      } else if (KeywordAhead("PREFIX")) {
        cur_.Skip(6);
        PrefixBody();
      } else if (KeywordAhead("BASE")) {
        cur_.Skip(4);
        BaseBody();
      } else {
        Statement();
        SkipWs();
        cur_.Expect('.');
      }
    }
    graph_.prefixes() = prefixes_;
    return std::move(graph_);
  }

 private:
  void SkipWs() {
    while (!cur_.AtEnd()) {
      char c = cur_.Peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        cur_.Next();
      } else if (c == '#') {
        while (!cur_.AtEnd() && cur_.Peek() != '\n') cur_.Next();
      } else {
        break;
      }
    }
  }

  bool KeywordAhead(std::string_view word) const {
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(cur_.Peek(i))) != word[i]) {
        return false;
      }
    }
    return std::isspace(static_cast<unsigned char>(cur_.Peek(word.size())));
  }

  void AtDirective() {
    if (cur_.LookingAt("@prefix") && !IsNameByte(cur_.Peek(7))) {
      cur_.Skip(7);
      PrefixBody();
      SkipWs();
      cur_.Expect('.');
    } else if (cur_.LookingAt("@base") && !IsNameByte(cur_.Peek(5))) {
      cur_.Skip(5);
      BaseBody();
      SkipWs();
      cur_.Expect('.');
    } else {
      cur_.Fail("unknown directive");
    }
  }

  void PrefixBody() {
    SkipWs();
    std::string label;
    while (!cur_.AtEnd() && cur_.Peek() != ':') {
      char c = cur_.Peek();
      if (!IsNameByte(c) && c != '.') cur_.Fail("invalid prefix label");
      label += cur_.Next();
    }
    if (!label.empty() && label.back() == '.') cur_.Fail("invalid prefix label");
    cur_.Expect(':');
    SkipWs();
    prefixes_[label] = Absolutize(cur_.ReadIriRef());
  }

  void BaseBody() {
    SkipWs();
    base_ = Absolutize(cur_.ReadIriRef());
  }

  std::string Absolutize(const std::string& iri) {
    if (IsAbsoluteIri(iri)) return iri;
    if (!base_) cur_.Fail("relative IRI <" + iri + "> with no @base in scope");
    std::string resolved = ResolveIri(*base_, iri);
    if (!IsAbsoluteIri(resolved)) cur_.Fail("IRI is not absolute after resolution");
    return resolved;
  }

  void Statement() {
    char c = cur_.Peek();
    if (c == '[') {
      Term subject = BlankPropertyList();
      SkipWs();
      if (cur_.Peek() != '.') PredicateObjectList(subject);
      return;
    }
    Term subject = Subject();
    SkipWs();
    PredicateObjectList(subject);
  }

  Term Subject() {
    char c = cur_.Peek();
    if (c == '<') return Term::Iri(Absolutize(cur_.ReadIriRef()));
    if (cur_.LookingAt("_:")) return Term::Blank(blanks_.Named(cur_.ReadBlankLabel()));
    if (c == '(') cur_.Fail("RDF collections '( ... )' are not supported");
    if (c == '"' || c == '\'' || c == '+' || c == '-' ||
        std::isdigit(static_cast<unsigned char>(c))) {
      cur_.Fail("literal in subject position");
    }
    return Term::Iri(PrefixedName());
  }

  // '[' has not been consumed yet.
  Term BlankPropertyList() {
    cur_.Expect('[');
    Term node = Term::Blank(blanks_.Fresh());
    SkipWs();
    if (cur_.Peek() != ']') {
      PredicateObjectList(node);
      SkipWs();
    }
    cur_.Expect(']');
    return node;
  }

  void PredicateObjectList(const Term& subject) {
    while (true) {
      Term predicate = Verb();
      SkipWs();
      ObjectList(subject, predicate);
      SkipWs();
      if (cur_.Peek() != ';') return;
      while (cur_.Peek() == ';') {
        cur_.Next();
        SkipWs();
      }
      char c = cur_.Peek();
      if (c == '.' || c == ']' || cur_.AtEnd()) return;
    }
  }

  Term Verb() {
    if (cur_.Peek() == 'a' && IsDelimiter(cur_.Peek(1)) &&
        cur_.Peek(1) != '.') {
      cur_.Next();
      return Term::Iri(vocab::kRdfType);
    }
    if (cur_.Peek() == '<') return Term::Iri(Absolutize(cur_.ReadIriRef()));
    if (cur_.LookingAt("_:") || cur_.Peek() == '[') {
      cur_.Fail("predicate must be an IRI");
    }
    return Term::Iri(PrefixedName());
  }

  void ObjectList(const Term& subject, const Term& predicate) {
    while (true) {
      Term object = Object();
      graph_.Add(subject, predicate, std::move(object));
      SkipWs();
      if (cur_.Peek() != ',') return;
      cur_.Next();
      SkipWs();
    }
  }

  Term Object() {
    char c = cur_.Peek();
    if (cur_.AtEnd()) cur_.Fail("expected object");
    if (c == '<') return Term::Iri(Absolutize(cur_.ReadIriRef()));
    if (cur_.LookingAt("_:")) return Term::Blank(blanks_.Named(cur_.ReadBlankLabel()));
    if (c == '[') return BlankPropertyList();
    if (c == '(') cur_.Fail("RDF collections '( ... )' are not supported");
    if (c == '"' || c == '\'') return StringLiteral();
    if (c == '+' || c == '-' || c == '.' ||
        std::isdigit(static_cast<unsigned char>(c))) {
      return NumericLiteral();
    }
    for (std::string_view word : {"true", "false"}) {
      if (cur_.LookingAt(word) && IsDelimiter(cur_.Peek(word.size()))) {
        cur_.Skip(word.size());
        return Term::Literal(std::string(word), {}, vocab::kXsdBoolean);
      }
    }
    return Term::Iri(PrefixedName());
  }

  Term StringLiteral() {
    std::string lexical = cur_.ReadString(true);
    if (cur_.Peek() == '@') return Term::Literal(lexical, cur_.ReadLangTag());
    if (cur_.LookingAt("^^")) {
      cur_.Skip(2);
      std::string datatype = cur_.Peek() == '<' ? Absolutize(cur_.ReadIriRef())
                                                : PrefixedName();
      return Term::Literal(lexical, {}, datatype);
    }
    return Term::Literal(lexical);
  }

  Term NumericLiteral() {
    std::string text;
    if (cur_.Peek() == '+' || cur_.Peek() == '-') text += cur_.Next();
    bool digits_before = false;
    bool digits_after = false;
    bool has_dot = false;
    bool has_exp = false;
    while (std::isdigit(static_cast<unsigned char>(cur_.Peek())) &&
           !cur_.AtEnd()) {
      text += cur_.Next();
      digits_before = true;
    }
    if (cur_.Peek() == '.' &&
        std::isdigit(static_cast<unsigned char>(cur_.Peek(1)))) {
      has_dot = true;
      text += cur_.Next();
      while (std::isdigit(static_cast<unsigned char>(cur_.Peek())) &&
             !cur_.AtEnd()) {
        text += cur_.Next();
        digits_after = true;
      }
    }
    if (!digits_before && !digits_after) cur_.Fail("malformed numeric literal");
    if (cur_.Peek() == 'e' || cur_.Peek() == 'E') {
      has_exp = true;
      text += cur_.Next();
      if (cur_.Peek() == '+' || cur_.Peek() == '-') text += cur_.Next();
      bool exp_digits = false;
      while (std::isdigit(static_cast<unsigned char>(cur_.Peek())) &&
             !cur_.AtEnd()) {
        text += cur_.Next();
        exp_digits = true;
      }
      if (!exp_digits) cur_.Fail("malformed exponent");
    }
    const std::string& datatype = has_exp   ? vocab::kXsdDouble
                                  : has_dot ? vocab::kXsdDecimal
                                            : vocab::kXsdInteger;
    return Term::Literal(text, {}, datatype);
  }

  std::string PrefixedName() {
    std::size_t line = cur_.line();
    std::size_t column = cur_.column();
    std::string token = cur_.Token();
    std::string prefix;
    while (!cur_.AtEnd() && cur_.Peek() != ':') {
      char c = cur_.Peek();
      if (!IsNameByte(c) && c != '.') break;
      prefix += cur_.Next();
    }
    if (cur_.Peek() != ':' || (!prefix.empty() && prefix.back() == '.')) {
      throw ParseError("expected IRI, prefixed name, blank node or literal",
                       line, column, token);
    }
    cur_.Next();
    std::string local;
    while (!cur_.AtEnd()) {
      char c = cur_.Peek();
      if (IsNameByte(c) || c == ':') {
        local += cur_.Next();
      } else if (c == '.') {
        char n = cur_.Peek(1);
        if (!(IsNameByte(n) || n == ':' || n == '%' || n == '\\')) {
          break;
        }
        local += cur_.Next();
      } else if (c == '%') {
        if (!std::isxdigit(static_cast<unsigned char>(cur_.Peek(1))) ||
            !std::isxdigit(static_cast<unsigned char>(cur_.Peek(2)))) {
          cur_.Fail("invalid percent escape in local name");
        }
        for (int i = 0; i < 3; ++i) local += cur_.Next();
      } else if (c == '\\') {
        cur_.Next();
        char e = cur_.Peek();
        static constexpr std::string_view kEscapable = "_~.-!$&'()*+,;=/?#@%";
        if (cur_.AtEnd() || kEscapable.find(e) == std::string_view::npos) {
          cur_.Fail("invalid escape in local name");
        }
        local += cur_.Next();
      } else {
        break;
      }
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) {
      throw ParseError("undefined prefix '" + prefix + ":'", line, column,
                       token);
    }
    return it->second + local;
  }

  Cursor cur_;
  Graph graph_;
  std::map<std::string, std::string> prefixes_;
  std::optional<std::string> base_;
  internal::BlankLabeler blanks_;
};

}  // namespace

Graph ParseTurtle(std::string_view input) { return TurtleParser(input).Run(); }

RdfFormat RdfFormatFromName(std::string_view name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (!lower.empty() && lower[0] == '.') lower.erase(0, 1);
  if (lower == "ttl" || lower == "turtle") return RdfFormat::kTurtle;
  if (lower == "nt" || lower == "ntriples" || lower == "n-triples") {
    return RdfFormat::kNTriples;
  }
  throw std::invalid_argument("unsupported RDF format '" + std::string(name) +
                              "' (expected turtle or ntriples)");
}

Graph ParseGraph(std::string_view input, RdfFormat format) {
  return format == RdfFormat::kTurtle ? ParseTurtle(input)
                                      : ParseNTriples(input);
}

}  // namespace schemagate::rdf
