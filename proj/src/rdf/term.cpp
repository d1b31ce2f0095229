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

#include "schemagate/rdf/term.hpp"

#include <stdexcept>

#include "schemagate/rdf/iri.hpp"

namespace schemagate::rdf {

std::string_view KindName(TermKind kind) {
  switch (kind) {
    case TermKind::kIri:
      return "iri";
    case TermKind::kBlank:
      return "blank";
    case TermKind::kLiteral:
      return "literal";
  }
  return "unknown";
}

Term Term::Iri(std::string iri) {
  if (!IsAbsoluteIri(iri)) {
    throw std::invalid_argument("not an absolute IRI: <" + iri + ">");
  }
  return Term(TermKind::kIri, std::move(iri), {}, {});
}

Term Term::Blank(std::string label) {
  if (label.empty()) throw std::invalid_argument("empty blank node label");
  return Term(TermKind::kBlank, std::move(label), {}, {});
}

Term Term::Literal(std::string lexical, std::string language,
                   std::string datatype) {
  if (!language.empty() && !datatype.empty()) {
    throw std::invalid_argument(
        "literal cannot carry both a language tag and a datatype");
  }
  return Term(TermKind::kLiteral, std::move(lexical), std::move(language),
              std::move(datatype));
}

std::string Term::ToDisplay() const {
  if (kind_ == TermKind::kBlank) return "_:" + value_;
  return value_;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.value_ <=> b.value_; c != 0) return c;
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.language_ <=> b.language_; c != 0) return c;
  return a.datatype_ <=> b.datatype_;
}

std::size_t TermHash::operator()(const Term& t) const {
  std::size_t h = std::hash<std::string>{}(t.value());
  h ^= static_cast<std::size_t>(t.kind()) + 0x9e3779b97f4a7c15ULL + (h << 6) +
       (h >> 2);
  h ^= std::hash<std::string>{}(t.language()) + (h << 6) + (h >> 2);
  h ^= std::hash<std::string>{}(t.datatype()) + (h << 6) + (h >> 2);
  return h;
}

bool Graph::Add(Triple triple) {
  if (triple.subject.is_literal()) {
    throw std::invalid_argument("literal in subject position: \"" +
                                triple.subject.value() + "\"");
  }
  if (!triple.predicate.is_iri()) {
    throw std::invalid_argument("predicate must be an IRI, got " +
                                triple.predicate.ToDisplay());
  }
  if (index_.contains(triple)) return false;
  index_.insert(triple);
  triples_.push_back(std::move(triple));
  return true;
}

namespace vocab {

const std::map<std::string, std::string>& WellKnownPrefixes() {
  static const std::map<std::string, std::string> kPrefixes = {
      {"rdf", std::string(kRdf)},   {"rdfs", std::string(kRdfs)},
      {"owl", std::string(kOwl)},   {"xsd", std::string(kXsd)},
      {"skos", std::string(kSkos)}, {"schema", "http://schema.org/"},
  };
  return kPrefixes;
}

}  // namespace vocab

std::string ExpandCurie(std::string_view text,
                        const std::map<std::string, std::string>& prefixes) {
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    return std::string(text.substr(1, text.size() - 2));
  }
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("not a prefixed name or IRI: " +
                                std::string(text));
  }
  std::string prefix(text.substr(0, colon));
  std::string_view local = text.substr(colon + 1);
  if (auto it = prefixes.find(prefix); it != prefixes.end()) {
    return it->second + std::string(local);
  }
  const auto& known = vocab::WellKnownPrefixes();
  if (auto it = known.find(prefix); it != known.end()) {
    return it->second + std::string(local);
  }
  if (local.starts_with("//") || prefix == "urn" || prefix == "mailto") {
    return std::string(text);
  }
  throw std::invalid_argument("undefined prefix '" + prefix + ":'");
}

}  // namespace schemagate::rdf
