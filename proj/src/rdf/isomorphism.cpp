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

#include "schemagate/rdf/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

namespace schemagate::rdf {

namespace {

using Color = std::size_t;

Color Mix(Color seed, Color value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

class Side {
 public:
  explicit Side(const Graph& g) : graph(g) {
    for (const Triple& t : g.triples()) {
      bool has_blank = t.subject.is_blank() || t.object.is_blank();
      if (!has_blank) {
        ground.insert(t);
        continue;
      }
      blank_triples.push_back(&t);
      for (const Term* term : {&t.subject, &t.object}) {
        if (term->is_blank()) {
          if (!colors.contains(term->value())) {
            colors[term->value()] = 0;
            blanks.push_back(term->value());
          }
          incident[term->value()].push_back(&t);
        }
      }
    }
  }

  Color TermColor(const Term& t) const {
    if (t.is_blank()) return Mix(1, colors.at(t.value()));
    return Mix(TermHash{}(t), 2);
  }

  void Refine() {
    std::unordered_map<std::string, Color> next;
    for (const std::string& b : blanks) {
      std::vector<Color> parts;
      for (const Triple* t : incident.at(b)) {
        Color c = std::hash<std::string>{}(t->predicate.value());
        bool as_subject = t->subject.is_blank() && t->subject.value() == b;
        bool as_object = t->object.is_blank() && t->object.value() == b;
        c = Mix(c, as_subject ? 11 : 0);
        c = Mix(c, as_object ? 13 : 0);
        c = Mix(c, as_subject ? TermColor(t->object) : TermColor(t->subject));
        parts.push_back(c);
      }
      std::sort(parts.begin(), parts.end());
      Color c = colors.at(b);
      for (Color p : parts) c = Mix(c, p);
      next[b] = c;
    }
    for (auto& [b, c] : next) colors[b] = c;
  }

  std::multiset<Color> ColorBag() const {
    std::multiset<Color> bag;
    for (const auto& [b, c] : colors) bag.insert(c);
    return bag;
  }

  const Graph& graph;
  std::set<Triple> ground;
  std::vector<const Triple*> blank_triples;
  std::vector<std::string> blanks;
  std::unordered_map<std::string, Color> colors;
  std::unordered_map<std::string, std::vector<const Triple*>> incident;
};

class Mapper {
 public:
  Mapper(const Side& a, const Side& b) : a_(a), b_(b) {
    order_ = a.blanks;
    std::map<Color, std::size_t> class_size;
    for (const auto& [label, c] : b.colors) ++class_size[c];
    std::stable_sort(order_.begin(), order_.end(),
                     [&](const std::string& x, const std::string& y) {
                       return class_size[a.colors.at(x)] <
                              class_size[a.colors.at(y)];
                     });
    for (const auto& [label, c] : b.colors) by_color_[c].push_back(label);
  }

  bool Run() { return Assign(0); }

 private:
  bool Assign(std::size_t i) {
    if (i == order_.size()) return true;
    const std::string& source = order_[i];
    for (const std::string& target : by_color_[a_.colors.at(source)]) {
      if (used_.contains(target)) continue;
      mapping_[source] = target;
      used_.insert(target);
      if (Consistent(source) && Assign(i + 1)) return true;
      used_.erase(target);
      mapping_.erase(source);
    }
    return false;
  }

  // Checks every triple around `source` whose blanks are all mapped.
  bool Consistent(const std::string& source) const {
    for (const Triple* t : a_.incident.at(source)) {
      Triple mapped = *t;
      bool complete = true;
      for (Term* term : {&mapped.subject, &mapped.object}) {
        if (!term->is_blank()) continue;
        auto it = mapping_.find(term->value());
        if (it == mapping_.end()) {
          complete = false;
          break;
        }
        *term = Term::Blank(it->second);
      }
      if (complete && !b_.graph.Contains(mapped)) return false;
    }
    return true;
  }

  const Side& a_;
  const Side& b_;
  std::vector<std::string> order_;
  std::map<Color, std::vector<std::string>> by_color_;
  std::map<std::string, std::string> mapping_;
  std::set<std::string> used_;
};

}  // namespace

bool Isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  Side sa(a);
  Side sb(b);
  if (sa.ground != sb.ground) return false;
  if (sa.blanks.size() != sb.blanks.size() ||
      sa.blank_triples.size() != sb.blank_triples.size()) {
    return false;
  }
  for (std::size_t round = 0; round <= sa.blanks.size() && round < 16; ++round) {
    sa.Refine();
    sb.Refine();
    if (sa.ColorBag() != sb.ColorBag()) return false;
  }
  return Mapper(sa, sb).Run();
}

}  // namespace schemagate::rdf
