#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "rasp/devtools.hpp"
#include "rasp/properties.hpp"
#include "rasp/wellsupport.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace rasp;
using fixtures::interp;

namespace {

Rule constraint(const std::string& text) {
  Program p = parse_program(text);
  REQUIRE(p.rules.size() == 1);
  return p.rules.front();
}

Program add_rule(const Program& p, const Rule& r) {
  std::vector<Rule> rules = p.rules;
  Rule copy = r;
  copy.id = static_cast<int>(rules.size()) + 1;
  rules.push_back(std::move(copy));
  std::set<Atom> sig = p.signature;
  collect_atoms(r.body, sig);
  for (const FormulaPtr& h : r.heads) collect_atoms(h, sig);
  return make_program(std::move(rules), std::move(sig));
}

// Re-derives the external-support test for a reported simple witness.
bool reverifies(const Program& p, const Interpretation& i, const UnfoundedWitness& w) {
  if (w.x.empty() || !is_subset(w.x, i)) return false;
  for (const Rule& r : p.rules) {
    if (is_constraint(r)) continue;
    bool meets = std::any_of(r.heads.begin(), r.heads.end(),
                             [&](const FormulaPtr& h) { return w.x.count(h->atom) > 0; });
    if (!meets) continue;
    if (!satisfies(i, r.body)) continue;
    std::vector<FormulaPtr> conjuncts;
    flatten_conjuncts(r.body, conjuncts);
    bool pos_in_x = std::any_of(conjuncts.begin(), conjuncts.end(), [&](const FormulaPtr& c) {
      return c->kind == Kind::Atom && w.x.count(c->atom) > 0;
    });
    if (pos_in_x) continue;
    bool rest_true = std::any_of(r.heads.begin(), r.heads.end(), [&](const FormulaPtr& h) {
      return !w.x.count(h->atom) && i.count(h->atom) > 0;
    });
    if (rest_true) continue;
    return false;  // externally supported after all
  }
  return true;
}

std::vector<Interpretation> well_supported_models(const Program& p) {
  std::vector<Interpretation> out;
  for (const Interpretation& m : models(p)) {
    if (ws_check_disjunctive(p, m).has_value()) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("property ids parse and print") {
  for (const char* name : {"MM", "FN", "WFN", "CM", "SCM"}) {
    CHECK(to_string(parse_property(name)) == name);
  }
  CHECK(parse_property("wfn") == PropertyId::WFN);
  CHECK_THROWS_AS(parse_property("ES"), Error);
}

TEST_CASE("unfounded atom sets") {
  Program core_neg = fixtures::prog(fixtures::kCoreWithNegRule);
  std::vector<UnfoundedWitness> xs = unfounded_sets(core_neg, interp("g1,g2,c1,c2"));
  REQUIRE(xs.size() == 1);
  CHECK(xs[0].x == interp("c2"));
  CHECK(reverifies(core_neg, interp("g1,g2,c1,c2"), xs[0]));

  Program loop = parse_program("p :- q. q :- p.");
  std::vector<UnfoundedWitness> ys = unfounded_sets(loop, interp("p,q"));
  REQUIRE(ys.size() == 1);
  CHECK(ys[0].x == interp("p,q"));

  CHECK(unfounded_sets(parse_program("p."), interp("p")).empty());
  CHECK(unfounded_sets(loop, {}).empty());
  CHECK_THROWS_AS(unfounded_sets(fixtures::prog(fixtures::kSelfSupport), interp("p(2)")),
                  NotSimpleError);
}

TEST_CASE("unfounded pair sets over epistemic models") {
  Program p3 = fixtures::prog(fixtures::kCoreWithModalConstraint);
  EpistemicModel w{interp("g1,g2,c1,c2")};
  std::vector<UnfoundedWitness> ss = epistemic_unfounded(p3, w);
  CHECK_FALSE(is_wfn_founded(p3, w));
  bool found = std::any_of(ss.begin(), ss.end(), [&](const UnfoundedWitness& s) {
    return s.pairs.size() == 1 && s.pairs[0].first == interp("c2") &&
           s.pairs[0].second == interp("g1,g2,c1,c2");
  });
  CHECK(found);

  CHECK(is_wfn_founded(parse_program("p."), EpistemicModel{interp("p")}));

  Program dneg = parse_program("p :- ~~p.");
  std::vector<UnfoundedWitness> ds = epistemic_unfounded(dneg, EpistemicModel{interp("p")});
  REQUIRE(ds.size() == 1);
  REQUIRE(ds[0].pairs.size() == 1);
  CHECK(ds[0].pairs[0].first == interp("p"));
  CHECK(ds[0].pairs[0].second == interp("p"));
}

TEST_CASE("positive subjective bodies cannot support their own guess") {
  Program know = fixtures::prog(fixtures::kKnowSelf);
  CHECK(is_wfn_founded(know, EpistemicModel{Interpretation{}}));
  std::vector<UnfoundedWitness> ss = epistemic_unfounded(know, EpistemicModel{interp("p")}, 1);
  REQUIRE(ss.size() == 1);
  CHECK(ss[0].pairs[0].first == interp("p"));

  CHECK(is_wfn_founded(parse_program("p :- ~q."), EpistemicModel{interp("p")}));
}

TEST_CASE("fragment violations are rejected") {
  EpistemicModel w{interp("p")};
  CHECK_THROWS_AS(epistemic_unfounded(parse_program("p :- not q."), w), FragmentError);
  CHECK_THROWS_AS(epistemic_unfounded(parse_program("p :- M q."), w), FragmentError);
  CHECK_THROWS_AS(epistemic_unfounded(parse_program("p :- q | r."), w), FragmentError);
  CHECK_THROWS_AS(epistemic_unfounded(fixtures::prog(fixtures::kImplicationHeads),
                                      EpistemicModel{interp("a,b")}),
                  FragmentError);
  CHECK_THROWS_AS(epistemic_unfounded(parse_program("p."), EpistemicModel{}), Error);
  CHECK_THROWS_AS(epistemic_unfounded(parse_program("p."), w, 0), Error);
}

TEST_CASE("minimal-model property") {
  Program choice = fixtures::prog(fixtures::kNonMinimalChoice);
  PropertyReport r = check_mm(choice, parse_semantics("RATIONAL"));
  CHECK(r.property == PropertyId::MM);
  CHECK_FALSE(r.holds);
  REQUIRE(r.as_witness.has_value());
  CHECK(*r.as_witness == interp("g1,g2,c1,c2,c3"));
  REQUIRE(r.smaller_model.has_value());
  CHECK(*r.smaller_model == interp("g1,g2,c2,c3"));

  PropertyReport vac = check_mm(choice, parse_semantics("GL"));
  CHECK(vac.holds);
  CHECK_FALSE(vac.as_witness.has_value());

  CHECK(check_mm(fixtures::prog(fixtures::kDisjunctiveCore), parse_semantics("RATIONAL")).holds);
}

TEST_CASE("foundedness property") {
  Program three = fixtures::prog(fixtures::kThreeWayChoice);
  PropertyReport di = check_fn(three, parse_semantics("DI_WJ"));
  CHECK_FALSE(di.holds);
  REQUIRE(di.as_witness.has_value());
  CHECK(*di.as_witness == interp("g1,g2,c1,c2,c3"));
  REQUIRE(di.unfounded.has_value());
  CHECK(di.unfounded->x == interp("c1"));
  CHECK(reverifies(three, *di.as_witness, *di.unfounded));

  // Classical support without negation-as-failure support is visible to FN.
  Program core_neg = fixtures::prog(fixtures::kCoreWithNegRule);
  PropertyReport rat = check_fn(core_neg, parse_semantics("RATIONAL"));
  CHECK_FALSE(rat.holds);
  CHECK(*rat.as_witness == interp("g1,g2,c1,c2"));
  CHECK(rat.unfounded->x == interp("c2"));

  CHECK(check_fn(three, parse_semantics("GL")).holds);
}

TEST_CASE("world-view foundedness property") {
  Program know = fixtures::prog(fixtures::kKnowSelf);
  CHECK(check_wfn(know, parse_semantics("RATIONAL")).holds);
  PropertyReport g91 = check_wfn(know, parse_semantics("G91"));
  CHECK_FALSE(g91.holds);
  REQUIRE(g91.wv_witness.has_value());
  CHECK(*g91.wv_witness == EpistemicModel{interp("p")});
  REQUIRE(g91.unfounded.has_value());
  CHECK(g91.unfounded->pairs[0].first == interp("p"));
}

TEST_CASE("constraint monotonicity") {
  Program core = fixtures::prog(fixtures::kDisjunctiveCore);
  Rule filter = constraint(":- ~c2.");
  PropertyReport r = check_cm(core, filter, parse_semantics("RATIONAL"));
  CHECK(r.property == PropertyId::CM);
  CHECK_FALSE(r.holds);
  REQUIRE(r.as_witness.has_value());
  CHECK(*r.as_witness == interp("g1,g2,c1,c2"));

  CHECK(check_cm(core, filter, parse_semantics("GL")).holds);

  CHECK_THROWS_AS(check_cm(core, constraint("p :- q."), parse_semantics("RATIONAL")),
                  NotConstraintError);
  CHECK_THROWS_AS(check_cm(core, constraint(":- ~K c2."), parse_semantics("RATIONAL")),
                  NotConstraintError);
}

TEST_CASE("subjective constraint monotonicity") {
  Program core = fixtures::prog(fixtures::kDisjunctiveCore);
  PropertyReport r = check_scm(core, constraint(":- ~K c2."), parse_semantics("RATIONAL"));
  CHECK(r.property == PropertyId::SCM);
  CHECK_FALSE(r.holds);
  REQUIRE(r.wv_witness.has_value());
  CHECK(*r.wv_witness == EpistemicModel{interp("g1,g2,c1,c2")});

  CHECK(check_scm(core, constraint(":- K c2."), parse_semantics("RATIONAL")).holds);

  CHECK_THROWS_AS(check_scm(core, constraint(":- c2."), parse_semantics("RATIONAL")),
                  NotConstraintError);
  CHECK_THROWS_AS(check_scm(core, constraint("p :- ~K q."), parse_semantics("RATIONAL")),
                  NotConstraintError);
}

TEST_CASE("stable-model properties hold on random simple programs") {
  std::mt19937 rng(88001);
  Rule filter = constraint(":- x1 & ~x2.");
  for (int t = 0; t < 20; ++t) {
    Program p = random_simple_normal(rng, 4, 5);
    CHECK(check_mm(p, parse_semantics("RATIONAL")).holds);
    CHECK(check_fn(p, parse_semantics("GL_NLP")).holds);
    CHECK(check_fn(p, parse_semantics("RATIONAL")).holds);
    CHECK(check_cm(p, filter, parse_semantics("GL_NLP")).holds);
  }
  for (int t = 0; t < 15; ++t) {
    Program p = random_simple_disjunctive(rng, 4, 4, 2);
    CHECK(check_mm(p, parse_semantics("GL")).holds);
    CHECK(check_fn(p, parse_semantics("GL")).holds);
  }
}

TEST_CASE("reported unfounded witnesses re-verify") {
  std::mt19937 rng(88002);
  for (int t = 0; t < 15; ++t) {
    Program p = random_simple_disjunctive(rng, 4, 4, 2);
    for (const Interpretation& m : models(p)) {
      for (const UnfoundedWitness& w : unfounded_sets(p, m)) {
        CHECK(reverifies(p, m, w));
      }
    }
  }
}

TEST_CASE("adding a constraint only filters well-supported models") {
  std::mt19937 rng(88003);
  Rule filter = constraint(":- x1 & ~x2.");
  for (int t = 0; t < 15; ++t) {
    Program p = random_simple_disjunctive(rng, 4, 4, 2);
    Program with = add_rule(p, filter);
    std::vector<Interpretation> expected;
    for (const Interpretation& m : well_supported_models(p)) {
      if (satisfies_rule(m, filter)) expected.push_back(m);
    }
    CHECK(well_supported_models(with) == expected);
  }
}
