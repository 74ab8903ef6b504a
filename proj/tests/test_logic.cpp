#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rasp/logic.hpp"
#include "support/fixtures.hpp"

using namespace rasp;
using fixtures::at;
using fixtures::interp;

TEST_CASE("classical satisfaction over all connectives") {
  Interpretation i = interp("a,b");
  CHECK(satisfies(i, parse_formula("a & b")));
  CHECK(satisfies(i, parse_formula("~c")));
  CHECK(satisfies(i, parse_formula("c -> a")));
  CHECK(satisfies(i, parse_formula("a <-> b")));
  CHECK_FALSE(satisfies(i, parse_formula("a <-> c")));
  CHECK(satisfies(i, parse_formula("#true")));
  CHECK_FALSE(satisfies(i, parse_formula("#false")));
  CHECK_FALSE(satisfies(Interpretation{}, parse_formula("a | b")));
}

TEST_CASE("satisfaction rejects epistemic formulas") {
  CHECK_THROWS_AS(satisfies(interp("p"), parse_formula("not p")), EpistemicProgramError);
}

TEST_CASE("entailment") {
  Theory negs = {parse_formula("~s")};
  CHECK(entails(negs, parse_formula("q | ~q")));
  CHECK(entails({parse_formula("q"), parse_formula("~s")}, parse_formula("q & ~s")));
  CHECK_FALSE(entails({}, parse_formula("q")));
  CHECK_FALSE(entails({parse_formula("a | b")}, parse_formula("a")));
  CHECK(entails({parse_formula("a | b"), parse_formula("~b")}, parse_formula("a")));
  // Inconsistent theories entail everything.
  CHECK(entails({parse_formula("a"), parse_formula("~a")}, parse_formula("z")));
}

TEST_CASE("resolution across disjunctive premises") {
  Theory t = {parse_formula("e | d"), parse_formula("e | ~d")};
  CHECK(entails(t, parse_formula("e")));
  CHECK_FALSE(entails(t, parse_formula("d")));
}

TEST_CASE("model enumeration is in ascending bitmask order") {
  std::set<Atom> sig = {at("a"), at("b")};
  std::vector<Interpretation> ms = models(Theory{parse_formula("a | b")}, sig);
  REQUIRE(ms.size() == 3);
  CHECK(ms[0] == interp("a"));
  CHECK(ms[1] == interp("b"));
  CHECK(ms[2] == interp("a,b"));

  // The signature drives enumeration even for atoms absent from the theory.
  std::set<Atom> wider = {at("a"), at("z")};
  CHECK(models(Theory{parse_formula("a")}, wider).size() == 2);
}

TEST_CASE("program models and minimal models") {
  Program core = fixtures::prog(fixtures::kDisjunctiveCore);
  std::vector<Interpretation> ms = models(core);
  REQUIRE(ms.size() == 3);
  CHECK(ms[0] == interp("g1,g2,c1"));
  CHECK(ms[1] == interp("g1,g2,c1,c2"));
  CHECK(ms[2] == interp("g1,g2,c1,c2,c3"));

  std::vector<Interpretation> mins = minimal_models(core);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0] == interp("g1,g2,c1"));
  CHECK(is_minimal_model(core, interp("g1,g2,c1")));
  CHECK_FALSE(is_minimal_model(core, interp("g1,g2,c1,c2")));
  CHECK_FALSE(is_model(core, interp("g1,g2,c2")));
}

TEST_CASE("constraints prune models") {
  Program p = fixtures::prog(fixtures::kCoreWithConstraint);
  for (const Interpretation& m : models(p)) CHECK(m.count(at("c2")));
}

TEST_CASE("logical equivalence") {
  CHECK(equivalent(parse_formula("a | (~b & c)"), parse_formula("(a | ~b) & (a | c)")));
  CHECK(equivalent(parse_formula("a -> b"), parse_formula("~a | b")));
  CHECK_FALSE(equivalent(parse_formula("a"), parse_formula("a | b")));
}

TEST_CASE("epistemic satisfaction quantifies over the collection") {
  EpistemicModel a = {interp("p"), Interpretation{}};
  // not F holds iff F fails somewhere in the collection.
  CHECK(ep_satisfies(a, interp("p"), parse_formula("not p")));
  CHECK_FALSE(ep_satisfies(a, interp("p"), parse_formula("K p")));
  CHECK(ep_satisfies(a, interp("p"), parse_formula("M p")));
  CHECK_FALSE(ep_satisfies(a, Interpretation{}, parse_formula("M p & p")));

  EpistemicModel only_p = {interp("p")};
  CHECK(ep_satisfies(only_p, interp("p"), parse_formula("K p")));
  CHECK_FALSE(ep_satisfies(only_p, interp("p"), parse_formula("not p")));
}

TEST_CASE("epistemic model recognition") {
  Program modal_self = fixtures::prog(fixtures::kModalSelf);
  CHECK(is_epistemic_model(modal_self, {interp("p")}));
  CHECK(is_epistemic_model(modal_self, {Interpretation{}}));
  // With both members, M p holds but the empty member misses p.
  CHECK_FALSE(is_epistemic_model(modal_self, {Interpretation{}, interp("p")}));

  Program cycle = fixtures::prog(fixtures::kModalCycle);
  CHECK(is_epistemic_model(cycle, {interp("p"), interp("q")}));
  CHECK(is_epistemic_model(cycle, {Interpretation{}}));
}

TEST_CASE("interpretation printing") {
  CHECK(print_interpretation(interp("b,a")) == "{a,b}");
  CHECK(print_interpretation(Interpretation{}) == "{}");
  CHECK(print_epistemic_model({interp("p"), interp("q")}) == "{p};{q}");
}

TEST_CASE("subset helper") {
  CHECK(is_subset(interp("a"), interp("a,b")));
  CHECK(is_subset(Interpretation{}, Interpretation{}));
  CHECK_FALSE(is_subset(interp("a,c"), interp("a,b")));
}
