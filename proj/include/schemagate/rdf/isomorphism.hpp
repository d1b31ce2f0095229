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

#ifndef SCHEMAGATE_RDF_ISOMORPHISM_HPP_
#define SCHEMAGATE_RDF_ISOMORPHISM_HPP_

#include "schemagate/rdf/term.hpp"

namespace schemagate::rdf {

// True when the triple sets of `a` and `b` are equal up to a bijective
// relabeling of blank nodes. Uses color refinement to partition blank
// nodes, then backtracks within equally colored classes.
bool Isomorphic(const Graph& a, const Graph& b);

}  // namespace schemagate::rdf

#endif  // SCHEMAGATE_RDF_ISOMORPHISM_HPP_
