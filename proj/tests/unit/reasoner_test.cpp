#include "semint/error.hpp"
#include "semint/ntriples.hpp"
#include "semint/reasoner.hpp"
#include "semint/vocab.hpp"

#include "support/random_graph.hpp"
#include "support/reasoner_oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

namespace semint::reasoner {
namespace {

using test_support::ex;

Term iri(std::string_view s) { return Term::iri(std::string(s)); }

const Term participates = iri(vocab::ro_participates_in);
const Term broader = iri(vocab::skos_broader);

TEST(ReasonerTest, DefaultAxioms) {
  const auto axioms = default_axioms();
  ASSERT_EQ(axioms.size(), 3u);
  for (const auto& a : axioms) {
    EXPECT_EQ(a.first, a.implied);
    EXPECT_EQ(a.second, vocab::skos_broader);
  }
  EXPECT_EQ(axioms[0].first, vocab::ro_participates_in);
  EXPECT_EQ(axioms[1].first, vocab::ro_has_function);
  EXPECT_EQ(axioms[2].first, vocab::ro_part_of);
}

TEST(ReasonerTest, EmptyGraph) {
  Graph g;
  EXPECT_EQ(materialize(g, default_axioms()).derived, 0u);
  EXPECT_EQ(g.size(), 0u);
}

TEST(ReasonerTest, PropagatesUpHierarchy) {
  Graph g;
  g.insert(ex("g"), participates, ex("apoptosis"));
  g.insert(ex("apoptosis"), broader, ex("cellDeath"));
  g.insert(ex("cellDeath"), broader, ex("biologicalProcess"));
  const auto report = materialize(g, default_axioms());
  EXPECT_EQ(report.derived, 2u);
  EXPECT_TRUE(g.contains({ex("g"), participates, ex("cellDeath")}));
  EXPECT_TRUE(g.contains({ex("g"), participates, ex("biologicalProcess")}));
  EXPECT_FALSE(g.contains({ex("apoptosis"), broader, ex("biologicalProcess")}));
  EXPECT_EQ(report.rounds, 3u);
  EXPECT_EQ(materialize(g, default_axioms()).derived, 0u);
}

TEST(ReasonerTest, NoBroaderNoDerivation) {
  Graph g;
  g.insert(ex("g"), participates, ex("a"));
  g.insert(ex("g"), iri(vocab::ro_part_of), ex("b"));
  const auto before = serialize_ntriples(g);
  EXPECT_EQ(materialize(g, default_axioms()).derived, 0u);
  EXPECT_EQ(serialize_ntriples(g), before);
}

TEST(ReasonerTest, CycleTerminates) {
  Graph g;
  g.insert(ex("g"), participates, ex("a"));
  g.insert(ex("a"), broader, ex("b"));
  g.insert(ex("b"), broader, ex("a"));
  EXPECT_EQ(materialize(g, default_axioms()).derived, 1u);
  EXPECT_TRUE(g.contains({ex("g"), participates, ex("b")}));
}

TEST(ReasonerTest, DeltaOnRightSide) {
  // A derived broader-side triple must be joined too: here `implied` feeds
  // `second` of another axiom.
  Graph g;
  g.insert(ex("x"), ex("p"), ex("y"));
  g.insert(ex("y"), ex("q"), ex("z"));
  g.insert(ex("w"), ex("r"), ex("x"));
  const std::vector<ChainAxiom> axioms{
      {ex("p").value(), ex("q").value(), ex("q").value()},
      {ex("r").value(), ex("q").value(), ex("s").value()}};
  const auto report = materialize(g, axioms);
  EXPECT_TRUE(g.contains({ex("x"), ex("q"), ex("z")}));
  EXPECT_TRUE(g.contains({ex("w"), ex("s"), ex("z")}));
  EXPECT_EQ(report.derived, 2u);
}

TEST(AxiomParseTest, ThreeColumns) {
  const auto axioms = parse_axioms(
      "# chains\n<http://e/p>\thttp://e/q\thttp://e/p\r\n\n");
  ASSERT_EQ(axioms.size(), 1u);
  EXPECT_EQ(axioms[0], (ChainAxiom{"http://e/p", "http://e/q", "http://e/p"}));
  EXPECT_THROW(parse_axioms("http://e/p\thttp://e/q\n"), DataError);
  EXPECT_THROW(parse_axioms("http://e/p\tq\thttp://e/p\n"), DataError);
}

TEST(ReasonerTest, MatchesReachabilityOracleOnRandomDags) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = test_support::random_dag_case(rng);
    Graph g;
    for (const auto& t : c.input) g.insert(t);
    const std::size_t before = g.size();
    const auto report = materialize(g, default_axioms());
    EXPECT_EQ(g.size(), before + report.derived);
    for (const auto& t : c.input) EXPECT_TRUE(g.contains(t));
    EXPECT_EQ(test_support::annotation_set(g), test_support::closure_oracle(c.annotations, c.up))
        << "trial " << trial;
    EXPECT_EQ(materialize(g, default_axioms()).derived, 0u);

    // order independence
    std::shuffle(c.input.begin(), c.input.end(), rng);
    Graph shuffled;
    for (const auto& t : c.input) shuffled.insert(t);
    materialize(shuffled, default_axioms());
    EXPECT_EQ(serialize_ntriples(shuffled), serialize_ntriples(g));
  }
}

}  // namespace
}  // namespace semint::reasoner
