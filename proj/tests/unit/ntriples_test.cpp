#include "semint/error.hpp"
#include "semint/ntriples.hpp"
#include "semint/vocab.hpp"
#include "support/random_graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace semint {
namespace {

using test_support::ex;

TEST(NTriplesTest, ParsesTypedDoubleLiteral) {
  const Graph g = parse_ntriples(
      "<http://example.org/a> <http://example.org/p> "
      "\"2.5\"^^<http://www.w3.org/2001/XMLSchema#double> .\n");
  ASSERT_EQ(g.size(), 1u);
  const Triple t = g.triples().front();
  EXPECT_EQ(t.object.value(), "2.5");
  EXPECT_EQ(t.object.datatype(), vocab::xsd_double);
}

TEST(NTriplesTest, EmptyInputGivesEmptyGraph) {
  EXPECT_EQ(parse_ntriples("").size(), 0u);
  EXPECT_EQ(parse_ntriples("# only a comment\n\n   \n").size(), 0u);
}

TEST(NTriplesTest, AcceptsCrlfAndComments) {
  const Graph g = parse_ntriples(
      "<http://e/a> <http://e/p> \"x\"@EN . # trailing\r\n"
      "_:b1 <http://e/p> <http://e/a>.\r\n");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.contains({Term::iri("http://e/a"), Term::iri("http://e/p"), Term::lang_literal("x", "en")}));
  EXPECT_TRUE(g.contains({Term::blank("b1"), Term::iri("http://e/p"), Term::iri("http://e/a")}));
}

TEST(NTriplesTest, DecodesEscapes) {
  const Graph g = parse_ntriples(
      "<http://e/a> <http://e/p> \"tab\\there \\\"q\\\" \\u00E9\\U0001F600\" .\n");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.triples()[0].object.value(), "tab\there \"q\" \xC3\xA9\xF0\x9F\x98\x80");
}

TEST(NTriplesTest, ErrorsCarryLineNumber) {
  try {
    parse_ntriples("<http://e/a> <http://e/p> <http://e/b> .\n<http://e/a> <http://e/p> .\n");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(NTriplesTest, RejectsRelativeIri) {
  EXPECT_THROW(parse_ntriples("<a> <http://e/p> <http://e/b> .\n"), DataError);
}

TEST(NTriplesTest, RejectsLiteralSubjectAndMissingDot) {
  EXPECT_THROW(parse_ntriples("\"x\" <http://e/p> <http://e/b> .\n"), DataError);
  EXPECT_THROW(parse_ntriples("<http://e/a> <http://e/p> <http://e/b>\n"), DataError);
  EXPECT_THROW(parse_ntriples("<http://e/a> _:p <http://e/b> .\n"), DataError);
  EXPECT_THROW(parse_ntriples("<http://e/a> <http://e/p> \"open .\n"), DataError);
}

TEST(NTriplesTest, SerializeEmptyGraph) { EXPECT_EQ(serialize_ntriples(Graph{}), ""); }

TEST(NTriplesTest, SerializeSingleTriple) {
  Graph g;
  g.insert(ex("a"), ex("p"), Term::literal("v"));
  EXPECT_EQ(serialize_ntriples(g), "<http://example.org/a> <http://example.org/p> \"v\" .\n");
}

TEST(NTriplesTest, OutputIndependentOfInsertionOrder) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    auto triples = test_support::random_triples(rng, 50);
    const std::string reference = serialize_ntriples(test_support::graph_of(triples));
    std::shuffle(triples.begin(), triples.end(), rng);
    EXPECT_EQ(serialize_ntriples(test_support::graph_of(triples)), reference);
  }
}

TEST(NTriplesTest, RoundTripPreservesGraph) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = test_support::graph_of(test_support::random_triples(rng, 10 + trial * 20));
    const std::string text = serialize_ntriples(g);
    const Graph back = parse_ntriples(text);
    EXPECT_TRUE(back.same_statements(g));
    EXPECT_EQ(serialize_ntriples(back), text);
  }
}

TEST(TurtleTest, UsesPrefixesAndKeepsStatementOrder) {
  Graph g;
  g.prefixes() = PrefixMap::standard();
  g.insert(Term::iri("http://purl.org/obo/owl/GO#0006915"), Term::iri(std::string(vocab::skos_broader)),
           Term::iri("http://purl.org/obo/owl/GO#0008219"));
  g.insert(Term::iri("http://example.org/o1"), Term::iri(std::string(vocab::iao_has_measurement_value)),
           Term::typed_literal("2.73", std::string(vocab::xsd_double)));
  const std::string ttl = serialize_turtle(g);
  EXPECT_NE(ttl.find("@prefix go: <http://purl.org/obo/owl/GO#> ."), std::string::npos);
  EXPECT_NE(ttl.find("go:0006915 skos:broader go:0008219 .\n"), std::string::npos);
  EXPECT_NE(ttl.find("<http://example.org/o1> obo:IAO_0000004 \"2.73\"^^xsd:double .\n"),
            std::string::npos);
}

}  // namespace
}  // namespace semint
