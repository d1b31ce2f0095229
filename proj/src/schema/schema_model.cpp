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

#include "schemagate/schema/schema_model.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <tuple>

namespace schemagate::schema {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;
namespace vocab = rdf::vocab;

void PredicateFilter::Validate() const {
  if (predicates.empty()) {
    throw std::invalid_argument("predicate filter must name at least one predicate");
  }
}

bool PredicateFilter::Allows(const std::string& predicate) const {
  bool listed = predicates.contains(predicate);
  return mode == Mode::kInclude ? listed : !listed;
}

const std::set<std::string>& SchemaBearingPredicates() {
  static const std::set<std::string> kPredicates = {
      vocab::kRdfType,           vocab::kRdfsSubClassOf,
      vocab::kRdfsDomain,        vocab::kRdfsRange,
      vocab::kRdfsLabel,         vocab::kSchemaDomainIncludes,
      vocab::kSchemaDomainIncludesHttps,
  };
  return kPredicates;
}

std::set<std::string> SchemaModel::PropertiesOf(const std::string& etype) const {
  std::set<std::string> out;
  for (const auto& [property, domain] : domain_of) {
    if (domain.contains(etype)) out.insert(property);
  }
  return out;
}

namespace {

bool IsEnglish(const std::string& tag) {
  if (tag.size() < 2) return false;
  bool en = std::tolower(static_cast<unsigned char>(tag[0])) == 'e' &&
            std::tolower(static_cast<unsigned char>(tag[1])) == 'n';
  return en && (tag.size() == 2 || tag[2] == '-');
}

// en (exact) < en-* < untagged < everything else; ties by value.
std::tuple<int, std::string, std::string> LabelRank(const Term& label) {
  const std::string& lang = label.language();
  int tier = 3;
  if (lang.size() == 2 && IsEnglish(lang)) {
    tier = 0;
  } else if (IsEnglish(lang)) {
    tier = 1;
  } else if (lang.empty()) {
    tier = 2;
  }
  return {tier, label.value(), lang};
}

std::string Joined(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += " -> ";
    out += parts[i];
  }
  return out;
}

}  // namespace

SchemaModel ExtractSchema(const Graph& graph,
                          const std::optional<PredicateFilter>& filter) {
  SchemaModel model;
  const auto& bearing = SchemaBearingPredicates();
  if (filter) {
    filter->Validate();
    if (filter->mode == PredicateFilter::Mode::kInclude) {
      for (const std::string& p : filter->predicates) {
        if (!bearing.contains(p)) {
          model.warnings.push_back("predicate <" + p +
                                   "> is not schema-bearing; ignored by the filter");
        }
      }
    }
  }
  auto active = [&](const std::string& predicate) {
    return bearing.contains(predicate) && (!filter || filter->Allows(predicate));
  };

  static const std::set<std::string> kClassTypes = {vocab::kRdfsClass,
                                                    vocab::kOwlClass};
  static const std::set<std::string> kPropertyTypes = {
      vocab::kRdfProperty, vocab::kOwlObjectProperty,
      vocab::kOwlDatatypeProperty};

  std::map<std::string, Term> best_label;
  std::size_t skipped_blank = 0;
  bool saw_skos = false;

  for (const Triple& t : graph.triples()) {
    const std::string& p = t.predicate.value();
    if (!active(p)) continue;
    const bool subject_iri = t.subject.is_iri();
    const bool object_iri = t.object.is_iri();
    const std::string& s = t.subject.value();
    const std::string& o = t.object.value();

    if (p == vocab::kRdfType) {
      if (!object_iri) continue;
      if (o == vocab::kSkosConcept || o == vocab::kSkosConceptScheme) saw_skos = true;
      if (!subject_iri) continue;
      if (kClassTypes.contains(o)) model.etypes.insert(s);
      if (kPropertyTypes.contains(o)) model.properties.insert(s);
    } else if (p == vocab::kRdfsDomain || p == vocab::kSchemaDomainIncludes ||
               p == vocab::kSchemaDomainIncludesHttps) {
      if (!subject_iri || !object_iri) {
        ++skipped_blank;
        continue;
      }
      model.properties.insert(s);
      model.etypes.insert(o);
      model.domain_of[s].insert(o);
    } else if (p == vocab::kRdfsRange) {
      if (object_iri) model.etypes.insert(o);
    } else if (p == vocab::kRdfsSubClassOf) {
      if (!subject_iri || !object_iri) {
        ++skipped_blank;
        continue;
      }
      model.etypes.insert(s);
      model.etypes.insert(o);
      if (s != o) model.subclass.emplace(s, o);
    } else if (p == vocab::kRdfsLabel) {
      if (!subject_iri || !t.object.is_literal()) continue;
      auto it = best_label.find(s);
      if (it == best_label.end() || LabelRank(t.object) < LabelRank(it->second)) {
        best_label.insert_or_assign(s, t.object);
      }
    }
  }

  for (const auto& [iri, label] : best_label) {
    if (model.etypes.contains(iri) || model.properties.contains(iri)) {
      model.labels[iri] = label.value();
    }
  }
  if (skipped_blank > 0) {
    model.warnings.push_back(std::to_string(skipped_blank) +
                             " domain/subclass statements with blank or literal "
                             "endpoints were skipped");
  }
  if (saw_skos) {
    model.warnings.push_back(
        "SKOS concept schemes are not modeled as entity types");
  }
  if (model.etypes.empty()) {
    model.empty_schema = true;
    model.warnings.push_back("no entity types found");
  }
  return model;
}

SubclassCycleError::SubclassCycleError(std::vector<std::string> cycle)
    : std::runtime_error("subclass cycle: " + Joined(cycle)),
      cycle_(std::move(cycle)) {}

SchemaModel InheritProperties(const SchemaModel& model) {
  std::map<std::string, std::vector<std::string>> parents;
  std::map<std::string, std::vector<std::string>> children;
  for (const auto& [child, parent] : model.subclass) {
    if (child == parent) continue;
    parents[child].push_back(parent);
    children[parent].push_back(child);
  }

  // Cycle detection over child -> parent edges: 0 unseen, 1 on stack, 2 done.
  std::map<std::string, int> state;
  std::vector<std::string> stack;
  std::function<void(const std::string&)> visit = [&](const std::string& node) {
    state[node] = 1;
    stack.push_back(node);
    for (const std::string& parent : parents[node]) {
      int st = state[parent];
      if (st == 1) {
        auto from = std::find(stack.begin(), stack.end(), parent);
        std::vector<std::string> cycle(from, stack.end());
        cycle.push_back(parent);
        throw SubclassCycleError(std::move(cycle));
      }
      if (st == 0) visit(parent);
    }
    stack.pop_back();
    state[node] = 2;
  };
  for (const auto& [child, unused] : parents) {
    if (state[child] == 0) visit(child);
  }

  SchemaModel out = model;
  for (auto& [property, domain] : out.domain_of) {
    std::vector<std::string> frontier(domain.begin(), domain.end());
    while (!frontier.empty()) {
      std::string c = std::move(frontier.back());
      frontier.pop_back();
      auto it = children.find(c);
      if (it == children.end()) continue;
      for (const std::string& child : it->second) {
        if (domain.insert(child).second) frontier.push_back(child);
      }
    }
  }
  return out;
}

}  // namespace schemagate::schema
