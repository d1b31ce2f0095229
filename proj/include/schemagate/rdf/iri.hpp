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

#ifndef SCHEMAGATE_RDF_IRI_HPP_
#define SCHEMAGATE_RDF_IRI_HPP_

#include <string>
#include <string_view>

namespace schemagate::rdf {

// True when `iri` starts with a scheme (ALPHA *(ALPHA / DIGIT / "+" / "-" /
// ".")) followed by ':'.
bool IsAbsoluteIri(std::string_view iri);

// RFC 3986 reference resolution (section 5.2, strict). `base` must be
// absolute; an absolute `reference` is returned with dot segments removed.
std::string ResolveIri(std::string_view base, std::string_view reference);

}  // namespace schemagate::rdf

#endif  // SCHEMAGATE_RDF_IRI_HPP_
