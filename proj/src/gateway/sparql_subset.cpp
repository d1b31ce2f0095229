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

#include "schemagate/gateway/sparql_subset.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "schemagate/rdf/serializer.hpp"
#include "schemagate/util/csv.hpp"

namespace schemagate::gateway {

UnsupportedFeature::UnsupportedFeature(std::string feature)
    : std::invalid_argument("unsupported SPARQL feature (only SELECT over a basic "
                            "graph pattern is available): " + feature),
      feature_(std::move(feature)) {}

namespace {

enum class Tok { kIri, kPname, kVar, kString, kLang, kCaret2, kNumber, kWord, kPunct, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

const std::set<std::string>& UnsupportedKeywords() {
  static const std::set<std::string> words = {
      "OPTIONAL", "FILTER",  "UNION",    "MINUS",     "GRAPH",  "BIND",
      "VALUES",   "SERVICE", "ORDER",    "GROUP",     "HAVING", "LIMIT",
      "OFFSET",   "FROM",    "CONSTRUCT", "ASK",      "DESCRIBE", "INSERT",
      "DELETE",   "LOAD",    "CLEAR",    "DROP",      "CREATE", "REDUCED",
      "EXISTS",   "NOT",     "AS"};
  return words;
}

std::string Upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

bool NameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.' || static_cast<unsigned char>(c) >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    for (;;) {
      SkipSpace();
      if (pos_ >= text_.size()) break;
      out.push_back(Next());
    }
    out.push_back({Tok::kEnd, "", text_.size()});
    return out;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw QuerySyntaxError(what + " at offset " + std::to_string(pos_));
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  Token Next() {
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == '<') {
      std::size_t end = text_.find('>', pos_);
      std::size_t space = text_.find_first_of(" \t\r\n", pos_);
      if (end == std::string_view::npos || (space != std::string_view::npos && space < end)) {
        // '<' as an operator only appears inside FILTER expressions.
        throw UnsupportedFeature("expressions");
      }
      pos_ = end + 1;
      return {Tok::kIri, std::string(text_.substr(start + 1, end - start - 1)), start};
    }
    if (c == '?' || c == '$') {
      ++pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      if (pos_ == start + 1) Fail("empty variable name");
      return {Tok::kVar, std::string(text_.substr(start + 1, pos_ - start - 1)), start};
    }
    if (c == '"' || c == '\'') return String(c);
    if (c == '@') {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
        ++pos_;
      }
      return {Tok::kLang, std::string(text_.substr(start + 1, pos_ - start - 1)), start};
    }
    if (c == '^') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '^') {
        pos_ += 2;
        return {Tok::kCaret2, "^^", start};
      }
      throw UnsupportedFeature("property paths");
    }
    if (c == '_' && pos_ + 1 < text_.size() && text_[pos_ + 1] == ':') {
      throw UnsupportedFeature("blank nodes in patterns");
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '-' || c == '+') && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
              text_[pos_] == 'e' || text_[pos_] == 'E')) {
        if (text_[pos_] == '.' &&
            (pos_ + 1 >= text_.size() ||
             !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
          break;
        }
        ++pos_;
      }
      return {Tok::kNumber, std::string(text_.substr(start, pos_ - start)), start};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == ':' ||
        static_cast<unsigned char>(c) >= 0x80) {
      while (pos_ < text_.size() && (NameChar(text_[pos_]) || text_[pos_] == ':')) ++pos_;
      // A trailing '.' ends the statement, not the name.
      while (pos_ > start && text_[pos_ - 1] == '.') --pos_;
      std::string word(text_.substr(start, pos_ - start));
      if (UnsupportedKeywords().contains(Upper(word))) {
        throw UnsupportedFeature(Upper(word));
      }
      return {word.find(':') == std::string::npos ? Tok::kWord : Tok::kPname, word, start};
    }
    switch (c) {
      case '{': case '}': case '.': case ';': case ',': case '*':
        ++pos_;
        return {Tok::kPunct, std::string(1, c), start};
      case '(': case ')': case '=': case '!': case '>':
        throw UnsupportedFeature("expressions");
      case '[':
        throw UnsupportedFeature("blank node property lists");
      case '/': case '|':
        throw UnsupportedFeature("property paths");
      default:
        Fail(std::string("unexpected character '") + c + "'");
    }
  }

  Token String(char quote) {
    std::size_t start = pos_;
    bool long_form = text_.substr(pos_, 3) == std::string(3, quote);
    pos_ += long_form ? 3 : 1;
    std::string value;
    for (;;) {
      if (pos_ >= text_.size()) Fail("unterminated string");
      char c = text_[pos_];
      if (long_form ? text_.substr(pos_, 3) == std::string(3, quote) : c == quote) {
        pos_ += long_form ? 3 : 1;
        return {Tok::kString, value, start};
      }
      if (!long_form && (c == '\n' || c == '\r')) Fail("newline in string");
      if (c == '\\') {
        if (pos_ + 1 >= text_.size()) Fail("dangling escape");
        char e = text_[pos_ + 1];
        switch (e) {
          case 't': value += '\t'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case 'b': value += '\b'; break;
          case 'f': value += '\f'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          default: Fail(std::string("unknown escape \\") + e);
        }
        pos_ += 2;
        continue;
      }
      value += c;
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  SelectQuery Run() {
    SelectQuery q;
    for (;;) {
      std::string kw = Keyword();
      if (kw == "PREFIX") {
        ++i_;
        const Token& name = Expect(Tok::kPname, "prefix name");
        if (name.text.back() != ':') Fail("prefix name must end with ':'");
        const Token& iri = Expect(Tok::kIri, "prefix IRI");
        prefixes_[name.text.substr(0, name.text.size() - 1)] = iri.text;
      } else if (kw == "BASE") {
        ++i_;
        Expect(Tok::kIri, "base IRI");
      } else {
        break;
      }
    }
    std::string kw = Keyword();
    if (kw != "SELECT") {
      if (UnsupportedKeywords().contains(kw)) throw UnsupportedFeature(kw);
      Fail("expected SELECT");
    }
    ++i_;
    if (Keyword() == "DISTINCT") {
      q.distinct = true;
      ++i_;
    }
    bool star = false;
    if (Peek().kind == Tok::kPunct && Peek().text == "*") {
      star = true;
      ++i_;
    } else {
      while (Peek().kind == Tok::kVar) q.variables.push_back(tokens_[i_++].text);
      if (q.variables.empty()) Fail("expected projected variables or '*'");
    }
    CheckUnsupported();
    if (Keyword() == "WHERE") ++i_;
    ExpectPunct("{");
    Block(q.patterns);
    ExpectPunct("}");
    CheckUnsupported();
    if (Peek().kind != Tok::kEnd) Fail("unexpected trailing input");
    if (q.patterns.empty()) Fail("empty graph pattern");

    std::set<std::string> seen;
    std::vector<std::string> in_order;
    for (const auto& p : q.patterns) {
      for (const rdf::PatternTerm* t : {&p.subject, &p.predicate, &p.object}) {
        if (const auto* v = std::get_if<rdf::Variable>(t)) {
          if (seen.insert(v->name).second) in_order.push_back(v->name);
        }
      }
    }
    if (star) {
      q.variables = in_order;
    } else {
      for (const auto& v : q.variables) {
        if (!seen.contains(v)) Fail("projected variable ?" + v + " is not in WHERE");
      }
    }
    return q;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw QuerySyntaxError(what + " at offset " + std::to_string(Peek().offset));
  }

  const Token& Peek() const { return tokens_[i_]; }

  std::string Keyword() const {
    return Peek().kind == Tok::kWord ? Upper(Peek().text) : "";
  }

  void CheckUnsupported() const {
    std::string kw = Keyword();
    if (UnsupportedKeywords().contains(kw)) throw UnsupportedFeature(kw);
  }

  const Token& Expect(Tok kind, const char* what) {
    if (Peek().kind != kind) Fail(std::string("expected ") + what);
    return tokens_[i_++];
  }

  void ExpectPunct(const char* p) {
    if (Peek().kind != Tok::kPunct || Peek().text != p) {
      Fail(std::string("expected '") + p + "'");
    }
    ++i_;
  }

  bool AtPunct(const char* p) const {
    return Peek().kind == Tok::kPunct && Peek().text == p;
  }

  void Block(std::vector<rdf::TriplePattern>& out) {
    while (!AtPunct("}")) {
      CheckUnsupported();
      if (AtPunct("{")) throw UnsupportedFeature("nested group graph patterns");
      if (Peek().kind == Tok::kEnd) Fail("unterminated graph pattern");
      rdf::PatternTerm subject = Node(false);
      for (;;) {
        rdf::PatternTerm predicate = Verb();
        for (;;) {
          out.push_back({subject, predicate, Node(true)});
          if (!AtPunct(",")) break;
          ++i_;
        }
        if (!AtPunct(";")) break;
        ++i_;
        if (AtPunct(".") || AtPunct("}")) break;
      }
      if (AtPunct(".")) {
        ++i_;
      } else if (!AtPunct("}")) {
        CheckUnsupported();
        Fail("expected '.' or '}'");
      }
    }
  }

  rdf::PatternTerm Verb() {
    if (Peek().kind == Tok::kWord && Peek().text == "a") {
      ++i_;
      return rdf::Term::Iri(rdf::vocab::kRdfType);
    }
    rdf::PatternTerm t = Node(false);
    if (const auto* term = std::get_if<rdf::Term>(&t); term && !term->is_iri()) {
      Fail("predicate must be an IRI or variable");
    }
    if (AtPunct("*")) throw UnsupportedFeature("property paths");
    return t;
  }

  rdf::PatternTerm Node(bool literal_ok) {
    const Token& t = Peek();
    switch (t.kind) {
      case Tok::kVar:
        ++i_;
        return rdf::Variable{t.text};
      case Tok::kIri:
        ++i_;
        return rdf::Term::Iri(t.text);
      case Tok::kPname:
        ++i_;
        try {
          return rdf::Term::Iri(rdf::ExpandCurie(t.text, prefixes_));
        } catch (const std::invalid_argument& e) {
          throw QuerySyntaxError(e.what());
        }
      case Tok::kString:
      case Tok::kNumber:
        if (!literal_ok) Fail("literal in subject or predicate position");
        return Literal();
      case Tok::kWord:
        if (literal_ok && (t.text == "true" || t.text == "false")) {
          ++i_;
          return rdf::Term::Literal(t.text, {}, rdf::vocab::kXsdBoolean);
        }
        CheckUnsupported();
        Fail("unexpected word '" + t.text + "'");
      default:
        Fail("expected a term");
    }
  }

  rdf::Term Literal() {
    const Token& t = tokens_[i_++];
    if (t.kind == Tok::kNumber) {
      bool has_exp = t.text.find_first_of("eE") != std::string::npos;
      bool has_dot = t.text.find('.') != std::string::npos;
      return rdf::Term::Literal(t.text, {},
                                has_exp   ? rdf::vocab::kXsdDouble
                                : has_dot ? rdf::vocab::kXsdDecimal
                                          : rdf::vocab::kXsdInteger);
    }
    if (Peek().kind == Tok::kLang) {
      return rdf::Term::Literal(t.text, tokens_[i_++].text);
    }
    if (Peek().kind == Tok::kCaret2) {
      ++i_;
      const Token& dt = Peek();
      if (dt.kind == Tok::kIri) {
        ++i_;
        return rdf::Term::Literal(t.text, {}, dt.text);
      }
      if (dt.kind == Tok::kPname) {
        ++i_;
        try {
          return rdf::Term::Literal(t.text, {}, rdf::ExpandCurie(dt.text, prefixes_));
        } catch (const std::invalid_argument& e) {
          throw QuerySyntaxError(e.what());
        }
      }
      Fail("expected datatype IRI");
    }
    return rdf::Term::Literal(t.text);
  }

  std::vector<Token> tokens_;
  std::size_t i_ = 0;
  std::map<std::string, std::string> prefixes_;
};

nlohmann::json TermJson(const rdf::Term& term) {
  if (term.is_iri()) return {{"type", "uri"}, {"value", term.value()}};
  if (term.is_blank()) return {{"type", "bnode"}, {"value", term.value()}};
  nlohmann::json doc = {{"type", "literal"}, {"value", term.value()}};
  if (!term.language().empty()) doc["xml:lang"] = term.language();
  if (!term.datatype().empty()) doc["datatype"] = term.datatype();
  return doc;
}

}  // namespace

SelectQuery ParseSelect(std::string_view text) {
  return Parser(Lexer(text).Run()).Run();
}

nlohmann::json QueryResult::ToJson() const {
  nlohmann::json bindings = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json b = nlohmann::json::object();
    for (std::size_t i = 0; i < variables.size(); ++i) b[variables[i]] = TermJson(row[i]);
    bindings.push_back(std::move(b));
  }
  return {{"head", {{"vars", variables}}}, {"results", {{"bindings", bindings}}}};
}

std::string QueryResult::ToCsv() const {
  std::string out = csv::Row(variables);
  for (const auto& row : rows) {
    std::vector<std::string> fields;
    for (const auto& term : row) fields.push_back(term.ToDisplay());
    out += csv::Row(fields);
  }
  return out;
}

QueryResult RunQuery(const rdf::Graph& graph, std::string_view text) {
  SelectQuery query = ParseSelect(text);
  QueryResult result;
  result.variables = query.variables;
  for (const auto& binding : rdf::MatchBgp(graph, query.patterns)) {
    std::vector<rdf::Term> row;
    for (const auto& v : query.variables) row.push_back(binding.at(v));
    result.rows.push_back(std::move(row));
  }
  if (query.distinct) {
    std::sort(result.rows.begin(), result.rows.end());
    result.rows.erase(std::unique(result.rows.begin(), result.rows.end()),
                      result.rows.end());
  }
  return result;
}

}  // namespace schemagate::gateway
