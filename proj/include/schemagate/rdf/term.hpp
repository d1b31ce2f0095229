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

#ifndef SCHEMAGATE_RDF_TERM_HPP_
#define SCHEMAGATE_RDF_TERM_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace schemagate::rdf {

enum class TermKind { kIri, kBlank, kLiteral };

std::string_view KindName(TermKind kind);

// An RDF term. IRIs hold absolute IRIs, blank nodes hold their label
// (without the "_:" prefix) and literals hold their lexical form plus at
// most one of a language tag or a datatype IRI.
class Term {
 public:
  Term() = default;

  static Term Iri(std::string iri);
  static Term Blank(std::string label);
  static Term Literal(std::string lexical, std::string language = {},
                      std::string datatype = {});

  TermKind kind() const { return kind_; }
  const std::string& value() const { return value_; }
  const std::string& language() const { return language_; }
  const std::string& datatype() const { return datatype_; }

  bool is_iri() const { return kind_ == TermKind::kIri; }
  bool is_blank() const { return kind_ == TermKind::kBlank; }
  bool is_literal() const { return kind_ == TermKind::kLiteral; }

  // Compact human-readable form: IRI as-is, "_:label", or the lexical form.
  std::string ToDisplay() const;

  // Ordered by value first so that sorted term lists read naturally.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
  friend bool operator==(const Term& a, const Term& b) = default;

 private:
  Term(TermKind kind, std::string value, std::string language,
       std::string datatype)
      : kind_(kind),
        value_(std::move(value)),
        language_(std::move(language)),
        datatype_(std::move(datatype)) {}

  TermKind kind_ = TermKind::kIri;
  std::string value_;
  std::string language_;
  std::string datatype_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// A duplicate-free list of triples that keeps insertion order, plus the
// prefix table the document declared.
class Graph {
 public:
  // Returns false when the triple was already present. Throws
  // std::invalid_argument when the triple violates the positional rules
  // (literal subject, non-IRI predicate).
  bool Add(Triple triple);
  bool Add(Term s, Term p, Term o) {
    return Add(Triple{std::move(s), std::move(p), std::move(o)});
  }

  bool Contains(const Triple& triple) const { return index_.contains(triple); }

  const std::vector<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  std::map<std::string, std::string>& prefixes() { return prefixes_; }
  const std::map<std::string, std::string>& prefixes() const {
    return prefixes_;
  }

 private:
  std::vector<Triple> triples_;
  std::set<Triple> index_;
  std::map<std::string, std::string> prefixes_;
};

// Well-known vocabulary IRIs.
namespace vocab {
inline constexpr std::string_view kRdf =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";

inline const std::string kRdfType = std::string(kRdf) + "type";
inline const std::string kRdfProperty = std::string(kRdf) + "Property";
inline const std::string kRdfsClass = std::string(kRdfs) + "Class";
inline const std::string kRdfsSubClassOf = std::string(kRdfs) + "subClassOf";
inline const std::string kRdfsDomain = std::string(kRdfs) + "domain";
inline const std::string kRdfsRange = std::string(kRdfs) + "range";
inline const std::string kRdfsLabel = std::string(kRdfs) + "label";
inline const std::string kOwlClass = std::string(kOwl) + "Class";
inline const std::string kOwlObjectProperty = std::string(kOwl) + "ObjectProperty";
inline const std::string kOwlDatatypeProperty =
    std::string(kOwl) + "DatatypeProperty";
inline const std::string kSchemaDomainIncludes = "http://schema.org/domainIncludes";
inline const std::string kSchemaDomainIncludesHttps =
    "https://schema.org/domainIncludes";
inline const std::string kSkosConcept = std::string(kSkos) + "Concept";
inline const std::string kSkosConceptScheme = std::string(kSkos) + "ConceptScheme";
inline const std::string kXsdInteger = std::string(kXsd) + "integer";
inline const std::string kXsdDecimal = std::string(kXsd) + "decimal";
inline const std::string kXsdDouble = std::string(kXsd) + "double";
inline const std::string kXsdBoolean = std::string(kXsd) + "boolean";

// rdf, rdfs, owl, xsd, skos and schema.
const std::map<std::string, std::string>& WellKnownPrefixes();
}  // namespace vocab

// Expands "prefix:local" against `prefixes` (falling back to the well-known
// table). Strings that already look like absolute IRIs, or that are wrapped
// in angle brackets, are returned unchanged. Throws std::invalid_argument on
// an unknown prefix.
std::string ExpandCurie(std::string_view text,
                        const std::map<std::string, std::string>& prefixes);

}  // namespace schemagate::rdf

#endif  // SCHEMAGATE_RDF_TERM_HPP_
