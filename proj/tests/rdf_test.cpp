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

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>

#include "gtest/gtest.h"
#include "schemagate/rdf/bgp.hpp"
#include "schemagate/rdf/iri.hpp"
#include "schemagate/rdf/isomorphism.hpp"
#include "schemagate/rdf/parser.hpp"
#include "schemagate/rdf/serializer.hpp"
#include "schemagate/rdf/table.hpp"
#include "schemagate/util/csv.hpp"
#include "test_util.hpp"

namespace schemagate::rdf {
namespace {

using testing::Fixture;
using testing::ReadFile;

const std::string kEx = "http://example.org/vocab#";

Graph LoadTurtle(const std::string& name) {
  return ParseTurtle(ReadFile(Fixture("turtle/" + name)));
}

bool HasTriple(const Graph& g, const Term& s, const std::string& p, const Term& o) {
  return g.Contains({s, Term::Iri(p), o});
}

std::vector<Term> Objects(const Graph& g, const std::string& predicate) {
  std::vector<Term> out;
  for (const auto& t : g.triples()) {
    if (t.predicate.value() == predicate) out.push_back(t.object);
  }
  return out;
}

TEST(IriTest, ResolvesNormalExamples) {
  const std::string base = "http://a/b/c/d;p?q";
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"g:h", "g:h"},
      {"g", "http://a/b/c/g"},
      {"./g", "http://a/b/c/g"},
      {"g/", "http://a/b/c/g/"},
      {"/g", "http://a/g"},
      {"//g", "http://g"},
      {"?y", "http://a/b/c/d;p?y"},
      {"g?y", "http://a/b/c/g?y"},
      {"#s", "http://a/b/c/d;p?q#s"},
      {"g#s", "http://a/b/c/g#s"},
      {"g?y#s", "http://a/b/c/g?y#s"},
      {";x", "http://a/b/c/;x"},
      {"g;x", "http://a/b/c/g;x"},
      {"g;x?y#s", "http://a/b/c/g;x?y#s"},
      {"", "http://a/b/c/d;p?q"},
      {".", "http://a/b/c/"},
      {"./", "http://a/b/c/"},
      {"..", "http://a/b/"},
      {"../", "http://a/b/"},
      {"../g", "http://a/b/g"},
      {"../..", "http://a/"},
      {"../../", "http://a/"},
      {"../../g", "http://a/g"},
  };
  for (const auto& [ref, expected] : cases) {
    EXPECT_EQ(ResolveIri(base, ref), expected) << "reference '" << ref << "'";
  }
}

TEST(IriTest, ResolvesAbnormalExamples) {
  const std::string base = "http://a/b/c/d;p?q";
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"../../../g", "http://a/g"},
      {"../../../../g", "http://a/g"},
      {"/./g", "http://a/g"},
      {"/../g", "http://a/g"},
      {"g.", "http://a/b/c/g."},
      {".g", "http://a/b/c/.g"},
      {"g..", "http://a/b/c/g.."},
      {"..g", "http://a/b/c/..g"},
      {"./../g", "http://a/b/g"},
      {"./g/.", "http://a/b/c/g/"},
      {"g/./h", "http://a/b/c/g/h"},
      {"g/../h", "http://a/b/c/h"},
      {"g;x=1/./y", "http://a/b/c/g;x=1/y"},
      {"g;x=1/../y", "http://a/b/c/y"},
      {"g?y/./x", "http://a/b/c/g?y/./x"},
      {"g?y/../x", "http://a/b/c/g?y/../x"},
      {"g#s/./x", "http://a/b/c/g#s/./x"},
      {"g#s/../x", "http://a/b/c/g#s/../x"},
      {"http:g", "http:g"},
  };
  for (const auto& [ref, expected] : cases) {
    EXPECT_EQ(ResolveIri(base, ref), expected) << "reference '" << ref << "'";
  }
}

TEST(TurtleTest, PrefixForms) {
  Graph g = LoadTurtle("01_prefixes.ttl");
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(HasTriple(g, Term::Iri("http://example.org/default/thing"),
                        kEx + "relatedTo", Term::Iri(kEx + "Person")));
  EXPECT_TRUE(HasTriple(g, Term::Iri("http://example.org/default/"), kEx + "isEmptyLocal",
                        Term::Literal("true", {}, vocab::kXsdBoolean)));
  Graph sparql = LoadTurtle("02_sparql_directives.ttl");
  EXPECT_TRUE(HasTriple(sparql, Term::Iri("http://example.org/base/a"), kEx + "knows",
                        Term::Iri("http://example.org/base/b")));
}

TEST(TurtleTest, BaseResolution) {
  Graph g = LoadTurtle("03_base_resolution.ttl");
  const std::string doc = "http://example.org/dir/sub/doc";
  EXPECT_TRUE(HasTriple(g, Term::Iri(doc), kEx + "self", Term::Iri(doc + "#frag")));
  EXPECT_TRUE(HasTriple(g, Term::Iri("http://example.org/dir/sub/other"), kEx + "sibling",
                        Term::Iri("http://example.org/dir/up")));
  EXPECT_TRUE(HasTriple(g, Term::Iri("http://example.org/dir/sub/same"), kEx + "root",
                        Term::Iri("http://example.org/absolute")));
  EXPECT_TRUE(HasTriple(g, Term::Iri(doc + "?query=1"), kEx + "next",
                        Term::Iri("http://host.example/path")));
  EXPECT_TRUE(HasTriple(g, Term::Iri("http://other.example/x"), kEx + "rebased",
                        Term::Iri("http://other.example/y/z")));
}

TEST(TurtleTest, KeywordAndLists) {
  Graph a = LoadTurtle("04_a_keyword.ttl");
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(HasTriple(a, Term::Iri(kEx + "Person"), vocab::kRdfType,
                        Term::Iri(vocab::kOwlClass)));
  Graph preds = LoadTurtle("05_predicate_lists.ttl");
  EXPECT_EQ(preds.size(), 6u);
  Graph objs = LoadTurtle("06_object_lists.ttl");
  // The repeated statement collapses into the set.
  EXPECT_EQ(objs.size(), 6u);
}

TEST(TurtleTest, BlankNodesRelabelledInOrder) {
  Graph g = LoadTurtle("07_blank_labels.ttl");
  ASSERT_EQ(g.size(), 4u);
  EXPECT_TRUE(HasTriple(g, Term::Blank("b0"), kEx + "knows", Term::Blank("b1")));
  EXPECT_TRUE(HasTriple(g, Term::Blank("b1"), kEx + "knows", Term::Blank("b0")));
  EXPECT_TRUE(HasTriple(g, Term::Blank("b2"), kEx + "name",
                        Term::Literal("shadow of a generated label")));
  EXPECT_TRUE(HasTriple(g, Term::Blank("b3"), kEx + "dotted", Term::Blank("b4")));
}

TEST(TurtleTest, AnonymousNodes) {
  Graph g = LoadTurtle("08_anonymous_nodes.ttl");
  EXPECT_EQ(g.size(), 9u);
  auto authors = Objects(g, kEx + "author");
  ASSERT_EQ(authors.size(), 1u);
  EXPECT_TRUE(authors[0].is_blank());
  EXPECT_TRUE(HasTriple(g, authors[0], kEx + "name", Term::Literal("Ann")));
  auto values = Objects(g, kEx + "value");
  ASSERT_EQ(values.size(), 1u);
  EXPECT_EQ(values[0], Term::Literal("3", {}, vocab::kXsdInteger));
}

TEST(TurtleTest, Strings) {
  Graph shorts = LoadTurtle("09_short_strings.ttl");
  EXPECT_EQ(Objects(shorts, kEx + "mixed")[0].value(), "it's");
  EXPECT_EQ(Objects(shorts, kEx + "mixed2")[0].value(), "say \"hi\"");
  EXPECT_EQ(Objects(shorts, kEx + "emptySingle")[0].value(), "");
  Graph longs = LoadTurtle("10_long_strings.ttl");
  EXPECT_EQ(Objects(longs, kEx + "long")[0].value(),
            "A long string\nspanning \"several\" lines\nwith \"\"two\"\" quote pairs.");
  EXPECT_EQ(Objects(longs, kEx + "longSingle")[0].value(),
            "Single-quoted\nlong form with 'quotes'.");
  EXPECT_EQ(Objects(longs, kEx + "edge")[0].value(), "ends with a quote\"");
}

TEST(TurtleTest, Escapes) {
  Graph g = LoadTurtle("11_escapes.ttl");
  EXPECT_EQ(Objects(g, kEx + "tab")[0].value(), "a\tb");
  EXPECT_EQ(Objects(g, kEx + "newline")[0].value(), "line1\nline2");
  EXPECT_EQ(Objects(g, kEx + "cr")[0].value(), "x\ry");
  EXPECT_EQ(Objects(g, kEx + "quote")[0].value(), "she said \"yes\"");
  EXPECT_EQ(Objects(g, kEx + "backslash")[0].value(), "C:\\path");
  EXPECT_EQ(Objects(g, kEx + "apos")[0].value(), "don't");
  EXPECT_EQ(Objects(g, kEx + "bf")[0].value(), "\b\f");
  EXPECT_EQ(Objects(g, kEx + "unicode")[0].value(), "caf\xC3\xA9");
  EXPECT_EQ(Objects(g, kEx + "astral")[0].value(), "\xF0\x9F\x98\x80");
  EXPECT_EQ(Objects(g, kEx + "raw")[0].value(), "na\xC3\xAFve \xE2\x98\x83");
  EXPECT_TRUE(HasTriple(g, Term::Iri("http://example.org/Abc"), kEx + "iriEscape",
                        Term::Literal("escaped IRI")));
}

TEST(TurtleTest, LanguageTagsAndDatatypes) {
  Graph g = LoadTurtle("12_language_tags.ttl");
  EXPECT_EQ(g.size(), 5u);
  EXPECT_TRUE(HasTriple(g, Term::Iri(kEx + "Person"), vocab::kRdfsLabel,
                        Term::Literal("Person", "de-CH")));
  Graph d = LoadTurtle("13_datatypes.ttl");
  EXPECT_TRUE(HasTriple(d, Term::Iri(kEx + "s"), kEx + "full",
                        Term::Literal("42", {}, std::string(vocab::kXsd) + "int")));
  EXPECT_TRUE(HasTriple(d, Term::Iri(kEx + "s"), kEx + "custom",
                        Term::Literal("x", {}, kEx + "myType")));
}

TEST(TurtleTest, NumbersAndBooleans) {
  Graph g = LoadTurtle("14_numbers_booleans.ttl");
  auto lit = [&](const std::string& p) { return Objects(g, kEx + p).at(0); };
  EXPECT_EQ(lit("int"), Term::Literal("42", {}, vocab::kXsdInteger));
  EXPECT_EQ(lit("neg"), Term::Literal("-7", {}, vocab::kXsdInteger));
  EXPECT_EQ(lit("pos"), Term::Literal("+3", {}, vocab::kXsdInteger));
  EXPECT_EQ(lit("dec"), Term::Literal("3.14", {}, vocab::kXsdDecimal));
  EXPECT_EQ(lit("negdec"), Term::Literal("-.5", {}, vocab::kXsdDecimal));
  EXPECT_EQ(lit("dbl"), Term::Literal("1.0e3", {}, vocab::kXsdDouble));
  EXPECT_EQ(lit("dbl2"), Term::Literal("-2E-2", {}, vocab::kXsdDouble));
  EXPECT_EQ(lit("dbl3"), Term::Literal(".5e1", {}, vocab::kXsdDouble));
  EXPECT_EQ(lit("no"), Term::Literal("false", {}, vocab::kXsdBoolean));
  EXPECT_EQ(lit("last"), Term::Literal("7", {}, vocab::kXsdInteger));
}

TEST(TurtleTest, LocalNames) {
  Graph g = LoadTurtle("15_local_names.ttl");
  auto p = kEx + "p";
  EXPECT_TRUE(HasTriple(g, Term::Iri(kEx + "with-dash"), p, Term::Iri(kEx + "with_underscore")));
  EXPECT_TRUE(HasTriple(g, Term::Iri(kEx + "with.dot"), p, Term::Iri(kEx + "trailing")));
  EXPECT_TRUE(HasTriple(g, Term::Iri(kEx + "123start"), p,
                        Term::Iri("https://schema.org/3DModel")));
  EXPECT_TRUE(HasTriple(g, Term::Iri(kEx + "esc-aped"), p, Term::Iri(kEx + "pct%20enc")));
  EXPECT_TRUE(HasTriple(g, Term::Iri(kEx + "colon:inside"), p, Term::Iri(kEx + "a~b.c")));
}

TEST(TurtleTest, CommentsAndWhitespace) {
  Graph g = LoadTurtle("16_comments_whitespace.ttl");
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(Objects(g, kEx + "q")[0].value(), "hash # inside string");
  EXPECT_EQ(Objects(g, kEx + "r")[0].value(), "http://example.org/#not-a-comment");
}

TEST(TurtleTest, ErrorsCarryPositions) {
  try {
    ParseTurtle("@prefix ex: <http://e/> .\nex:a ex:b\n  nope:c .\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_NE(e.message().find("nope"), std::string::npos);
  }
  EXPECT_THROW(ParseTurtle("<http://e/a> <http://e/b> ( 1 2 ) ."), ParseError);
  EXPECT_THROW(ParseTurtle("\"lit\" <http://e/b> <http://e/c> ."), ParseError);
  EXPECT_THROW(ParseTurtle("<http://e/a> <http://e/b> \"open ."), ParseError);
  EXPECT_THROW(ParseTurtle("<rel> <http://e/b> <http://e/c> ."), ParseError);
  EXPECT_THROW(ParseTurtle("<http://e/a> <http://e/b> <http://e/c>"), ParseError);
}

TEST(NTriplesTest, ParsesAndRejects) {
  Graph g = ParseNTriples(
      "<http://e/a> <http://e/p> \"x\\u00E9\"@en .\n"
      "# comment\n"
      "_:n1 <http://e/p> \"5\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.Contains({Term::Iri("http://e/a"), Term::Iri("http://e/p"),
                          Term::Literal("x\xC3\xA9", "en")}));
  EXPECT_TRUE(g.Contains({Term::Blank("b0"), Term::Iri("http://e/p"),
                          Term::Literal("5", {}, vocab::kXsdInteger)}));
  EXPECT_THROW(ParseNTriples("ex:a <http://e/p> <http://e/o> .\n"), ParseError);
  EXPECT_THROW(ParseNTriples("<http://e/a> <http://e/p> <http://e/o>\n"), ParseError);
}

TEST(RoundTripTest, CorpusSurvivesBothSerializations) {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(Fixture("turtle"))) {
    Graph original = ParseTurtle(ReadFile(entry.path()));
    Graph via_ttl = ParseTurtle(SerializeGraph(original, RdfFormat::kTurtle));
    Graph via_nt = ParseNTriples(SerializeGraph(original, RdfFormat::kNTriples));
    EXPECT_TRUE(Isomorphic(original, via_ttl)) << entry.path();
    EXPECT_TRUE(Isomorphic(original, via_nt)) << entry.path();
    ++files;
  }
  EXPECT_GE(files, 15u);
}

TEST(RoundTripTest, PublishedTurtleAndNTriplesAgree) {
  Graph ttl = ParseTurtle(ReadFile(Fixture("schemaorg/schemaorg-current-https.ttl")));
  Graph nt = ParseNTriples(ReadFile(Fixture("schemaorg/schemaorg-current-https.nt")));
  EXPECT_GT(ttl.size(), 10000u);
  EXPECT_EQ(ttl.size(), nt.size());
  EXPECT_TRUE(Isomorphic(ttl, nt));
}

TEST(IsomorphismTest, BlankRelabelling) {
  Graph a;
  a.Add(Term::Blank("x"), Term::Iri("http://e/p"), Term::Blank("y"));
  a.Add(Term::Blank("y"), Term::Iri("http://e/p"), Term::Blank("z"));
  a.Add(Term::Blank("z"), Term::Iri("http://e/q"), Term::Literal("end"));
  Graph b;
  b.Add(Term::Blank("k2"), Term::Iri("http://e/q"), Term::Literal("end"));
  b.Add(Term::Blank("k1"), Term::Iri("http://e/p"), Term::Blank("k2"));
  b.Add(Term::Blank("k0"), Term::Iri("http://e/p"), Term::Blank("k1"));
  EXPECT_TRUE(Isomorphic(a, b));

  Graph c;  // same shape, but the chain's end moved
  c.Add(Term::Blank("k0"), Term::Iri("http://e/q"), Term::Literal("end"));
  c.Add(Term::Blank("k1"), Term::Iri("http://e/p"), Term::Blank("k2"));
  c.Add(Term::Blank("k0"), Term::Iri("http://e/p"), Term::Blank("k1"));
  EXPECT_FALSE(Isomorphic(a, c));
}

TEST(IsomorphismTest, RegularStructuresNeedBacktracking) {
  // Two 6-cycles versus one 3-cycle pair: colour refinement alone cannot
  // tell them apart.
  auto cycle = [](Graph& g, const std::vector<std::string>& nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      g.Add(Term::Blank(nodes[i]), Term::Iri("http://e/next"),
            Term::Blank(nodes[(i + 1) % nodes.size()]));
    }
  };
  Graph six;
  cycle(six, {"a", "b", "c", "d", "e", "f"});
  Graph threes;
  cycle(threes, {"a", "b", "c"});
  cycle(threes, {"d", "e", "f"});
  EXPECT_FALSE(Isomorphic(six, threes));
  Graph six_again;
  cycle(six_again, {"u", "w", "y", "v", "x", "z"});
  EXPECT_TRUE(Isomorphic(six, six_again));
}

TEST(IsomorphismTest, RandomPermutations) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    Graph g;
    std::size_t nodes = 2 + rng() % 8;
    for (int i = 0; i < 15; ++i) {
      g.Add(Term::Blank("n" + std::to_string(rng() % nodes)),
            Term::Iri("http://e/p" + std::to_string(rng() % 2)),
            Term::Blank("n" + std::to_string(rng() % nodes)));
    }
    std::vector<std::size_t> perm(nodes);
    for (std::size_t i = 0; i < nodes; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h;
    auto rename = [&](const Term& t) {
      return Term::Blank("m" + std::to_string(perm[std::stoul(t.value().substr(1))]));
    };
    for (const auto& t : g.triples()) h.Add(rename(t.subject), t.predicate, rename(t.object));
    EXPECT_TRUE(Isomorphic(g, h)) << "round " << round;
    Graph broken = h;
    broken.Add(Term::Blank("extra"), Term::Iri("http://e/p0"), Term::Blank("m0"));
    EXPECT_FALSE(Isomorphic(g, broken)) << "round " << round;
  }
}

TEST(BgpTest, MatchesToySchema) {
  Graph toy = ParseTurtle(ReadFile(Fixture("toy.ttl")));
  const std::string ex = "http://example.org/";
  std::vector<TriplePattern> domain = {
      {Variable{"s"}, Term::Iri(vocab::kRdfsDomain), Term::Iri(ex + "Person")}};
  auto rows = MatchBgp(toy, domain);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].at("s"), Term::Iri(ex + "birthDate"));
  EXPECT_EQ(rows[1].at("s"), Term::Iri(ex + "name"));

  std::vector<TriplePattern> join = {
      {Variable{"c"}, Term::Iri(vocab::kRdfsSubClassOf), Variable{"parent"}},
      {Variable{"p"}, Term::Iri(vocab::kRdfsDomain), Variable{"parent"}}};
  auto joined = MatchBgp(toy, join);
  EXPECT_EQ(joined.size(), 2u);
  for (const auto& row : joined) EXPECT_EQ(row.at("c"), Term::Iri(ex + "Athlete"));

  std::vector<TriplePattern> none = {
      {Variable{"s"}, Term::Iri(vocab::kRdfsDomain), Term::Iri(ex + "Nobody")}};
  EXPECT_TRUE(MatchBgp(toy, none).empty());
  EXPECT_THROW(MatchBgp(toy, std::vector<TriplePattern>{}), std::invalid_argument);
}

TEST(BgpTest, RepeatedVariableMustAgree) {
  Graph g;
  g.Add(Term::Iri("http://e/a"), Term::Iri("http://e/p"), Term::Iri("http://e/a"));
  g.Add(Term::Iri("http://e/a"), Term::Iri("http://e/p"), Term::Iri("http://e/b"));
  std::vector<TriplePattern> loop = {
      {Variable{"x"}, Term::Iri("http://e/p"), Variable{"x"}}};
  auto rows = MatchBgp(g, loop);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].at("x"), Term::Iri("http://e/a"));
}

TEST(TableTest, CsvRowsPerTriple) {
  Graph g = ParseTurtle(
      "@prefix ex: <http://e/> . ex:a ex:label \"x, y\"@en ; ex:n 3 ; ex:o [] .");
  std::string text = TriplesToTable(g).ToCsv();
  auto rows = csv::Parse(text);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"subject", "predicate", "object",
                                               "object_kind", "language", "datatype"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"http://e/a", "http://e/label", "x, y",
                                               "literal", "en", ""}));
  EXPECT_EQ(rows[2][5], vocab::kXsdInteger);
  EXPECT_EQ(rows[3][2], "_:b0");
  EXPECT_EQ(rows[3][3], "blank");
}

}  // namespace
}  // namespace schemagate::rdf
