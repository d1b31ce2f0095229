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

#include "schemagate/rdf/serializer.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <unordered_map>

namespace schemagate::rdf {

namespace {

class BlankNames {
 public:
  const std::string& Get(const std::string& label) {
    auto [it, inserted] = names_.try_emplace(label);
    if (inserted) it->second = "b" + std::to_string(names_.size() - 1);
    return it->second;
  }

 private:
  std::unordered_map<std::string, std::string> names_;
};

std::string EscapeIri(std::string_view iri) {
  std::string out;
  for (char c : iri) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '^' || c == '`' || c == '\\') {
      char buf[12];
      std::snprintf(buf, sizeof(buf), "\\u%04X", u);
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

class Writer {
 public:
  explicit Writer(const Graph& graph) : graph_(graph) {}

  std::string NTriples() {
    std::string out;
    for (const Triple& t : graph_.triples()) {
      out += FullTerm(t.subject);
      out += ' ';
      out += FullTerm(t.predicate);
      out += ' ';
      out += FullTerm(t.object);
      out += " .\n";
    }
    return out;
  }

  std::string Turtle() {
    std::string out;
    for (const auto& [label, ns] : graph_.prefixes()) {
      out += "@prefix " + label + ": <" + EscapeIri(ns) + "> .\n";
    }
    if (!graph_.prefixes().empty() && !graph_.empty()) out += '\n';

    // Group by subject, then predicate, in order of first appearance.
    std::vector<const Term*> subjects;
    std::map<Term, std::vector<std::pair<const Term*, std::vector<const Term*>>>>
        groups;
    for (const Triple& t : graph_.triples()) {
      auto [it, inserted] = groups.try_emplace(t.subject);
      if (inserted) subjects.push_back(&it->first);
      auto& preds = it->second;
      auto p = std::find_if(preds.begin(), preds.end(), [&](const auto& e) {
        return *e.first == t.predicate;
      });
      if (p == preds.end()) {
        preds.push_back({&t.predicate, {}});
        p = std::prev(preds.end());
      }
      p->second.push_back(&t.object);
    }
    for (const Term* subject : subjects) {
      out += CompactTerm(*subject);
      const auto& preds = groups.at(*subject);
      for (std::size_t i = 0; i < preds.size(); ++i) {
        out += i == 0 ? " " : " ;\n    ";
        out += preds[i].first->value() == vocab::kRdfType
                   ? std::string("a")
                   : CompactTerm(*preds[i].first);
        for (std::size_t j = 0; j < preds[i].second.size(); ++j) {
          out += j == 0 ? " " : ",\n        ";
          out += CompactTerm(*preds[i].second[j]);
        }
      }
      out += " .\n";
    }
    return out;
  }

 private:
  std::string FullTerm(const Term& t) {
    switch (t.kind()) {
      case TermKind::kIri:
        return "<" + EscapeIri(t.value()) + ">";
      case TermKind::kBlank:
        return "_:" + blanks_.Get(t.value());
      case TermKind::kLiteral: {
        std::string out = "\"" + EscapeString(t.value()) + "\"";
        if (!t.language().empty()) return out + "@" + t.language();
        if (!t.datatype().empty()) {
          return out + "^^<" + EscapeIri(t.datatype()) + ">";
        }
        return out;
      }
    }
    return {};
  }

  static bool SafeLocal(std::string_view local) {
    if (local.empty()) return true;
    auto first = static_cast<unsigned char>(local[0]);
    if (!std::isalnum(first) && local[0] != '_') return false;
    for (char c : local) {
      auto u = static_cast<unsigned char>(c);
      if (!std::isalnum(u) && c != '_' && c != '-') return false;
    }
    return true;
  }

  std::string Compact(const std::string& iri) {
    const std::pair<const std::string, std::string>* best = nullptr;
    for (const auto& entry : graph_.prefixes()) {
      if (iri.starts_with(entry.second) &&
          SafeLocal(std::string_view(iri).substr(entry.second.size())) &&
          (best == nullptr || entry.second.size() > best->second.size())) {
        best = &entry;
      }
    }
    if (best == nullptr) return "<" + EscapeIri(iri) + ">";
    return best->first + ":" + iri.substr(best->second.size());
  }

  std::string CompactTerm(const Term& t) {
    if (t.is_iri()) return Compact(t.value());
    if (t.is_literal() && t.language().empty() && !t.datatype().empty()) {
      return "\"" + EscapeString(t.value()) + "\"^^" + Compact(t.datatype());
    }
    return FullTerm(t);
  }

  const Graph& graph_;
  BlankNames blanks_;
};

}  // namespace

std::string EscapeString(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04X", static_cast<unsigned char>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string SerializeGraph(const Graph& graph, RdfFormat format) {
  Writer writer(graph);
  return format == RdfFormat::kTurtle ? writer.Turtle() : writer.NTriples();
}

}  // namespace schemagate::rdf
