#pragma once

#include <initializer_list>
#include <string>

#include "rasp/cli.hpp"
#include "rasp/logic.hpp"
#include "rasp/syntax.hpp"

namespace fixtures {

using rasp::Atom;
using rasp::EpistemicModel;
using rasp::Interpretation;
using rasp::Program;

inline Program prog(const std::string& text) { return rasp::ground(rasp::parse_program(text)); }

inline Interpretation interp(const std::string& csv) { return rasp::parse_interpretation(csv); }

inline EpistemicModel emodel(const std::string& text) { return rasp::parse_epistemic_model(text); }

inline Atom at(std::string name) { return Atom{std::move(name), {}}; }

// Six-rule disjunctive core: two facts feed two binary choices whose
// tie-breaking rules leave {g1,g2,c1} and {g1,g2,c1,c2} as candidate models.
inline const std::string kDisjunctiveCore =
    "g1.\n"
    "g2.\n"
    "c1 ; c2 :- g1.\n"
    "c1 ; c3 :- g2.\n"
    "c1 :- c2 & c3.\n"
    "c2 :- c3.\n";

// Core plus a rule deriving c3 from the absence of c2.
inline const std::string kCoreWithNegRule = kDisjunctiveCore + "c3 :- c1 & ~c2.\n";

// Core plus a default rule / constraint / subjective constraint on c2.
inline const std::string kCoreWithDefault = kDisjunctiveCore + "c3 :- ~c2.\n";
inline const std::string kCoreWithConstraint = kDisjunctiveCore + ":- ~c2.\n";
inline const std::string kCoreWithModalConstraint = kDisjunctiveCore + ":- ~K c2.\n";

// Disjunctive program whose unique rational answer set is not a minimal model.
inline const std::string kNonMinimalChoice =
    "g1.\n"
    "g2.\n"
    "c1 ; c2 :- g1.\n"
    "c1 ; c2 :- g2.\n"
    "c1 :- ~c3.\n"
    "c2 :- c1.\n"
    "c3 :- c1.\n";

// Tautological body: q is derivable from nothing, p from q.
inline const std::string kTautologyBody =
    "q :- q | ~q.\n"
    "p :- q & ~s.\n";

// Definite chain used as a reduct fixture.
inline const std::string kFactChain =
    "g1.\n"
    "g2.\n"
    "c2 :- g1.\n"
    "c1 :- g2.\n";

// Three-way choice where self-defeating rules eliminate c1-free models.
inline const std::string kThreeWayChoice =
    "g1.\n"
    "g2.\n"
    "c1 ; c2 ; c3 :- g1.\n"
    "c1 ; c2 ; c3 :- g2.\n"
    "c2 :- c1.\n"
    "c3 :- c1.\n"
    "c2 :- ~c2.\n"
    "c3 :- ~c3.\n";

// Single rule whose body is a tautology containing its own head.
inline const std::string kSelfSupport = "p(2) :- ~p(2) | p(2).\n";

// Three-rule program with a negated-disjunction body; {p(-1),p(1)} passes the
// FLP test through self-supporting inference.
inline const std::string kNestedSelfSupport =
    "p(2) :- ~(~p(2) | (p(-1) & ~p(1))).\n"
    "p(-1) :- ~p(-1) | p(1) | p(2).\n"
    "p(1) :- p(-1).\n";

// Choice by double negation next to derivation by negation.
inline const std::string kDoubleNegationChoice =
    "p :- ~~p.\n"
    "p :- ~p.\n";

// Disjunctive heads that are implications, not atoms.
inline const std::string kImplicationHeads =
    "a -> b ; b -> a.\n"
    "a.\n"
    "b :- ~b.\n";

// Two rules deriving each atom from the possibility of the other's absence.
inline const std::string kModalCycle =
    "p :- M q & ~q.\n"
    "q :- M p & ~p.\n";

// Normal program with formula heads arranged in three derivation layers.
inline const std::string kLayeredDisjunctions =
    "e | d.\n"
    "e | ~d.\n"
    "a | (~b & c).\n"
    "a | d :- b | c.\n"
    "(a | ~b) & (a | c) :- c & d & e.\n";

// Minimal subjective self-references.
inline const std::string kModalSelf = "p :- M p.\n";
inline const std::string kKnowSelf = "p :- K p.\n";

// Hamiltonian cycle search over a four-edge graph with a unique cycle.
inline const std::string kHamiltonian =
    "node(a). node(b). node(c).\n"
    "edge(a,c). edge(b,a). edge(b,c). edge(c,b).\n"
    "in(X,Y) ; ~in(X,Y) :- edge(X,Y).\n"
    "path(X,Y) :- in(X,Y).\n"
    "path(X,Y) :- in(X,Z) & path(Z,Y).\n"
    ":- in(X,Y) & in(X,Z) & Y != Z.\n"
    ":- in(X,Y) & in(Z,Y) & X != Z.\n"
    ":- node(X) & node(Y) & ~path(X,Y).\n";

inline const std::string kHamiltonianAnswer =
    "node(a),node(b),node(c),"
    "edge(a,c),edge(b,a),edge(b,c),edge(c,b),"
    "in(a,c),in(c,b),in(b,a),"
    "path(a,a),path(a,b),path(a,c),"
    "path(b,a),path(b,b),path(b,c),"
    "path(c,a),path(c,b),path(c,c)";

}  // namespace fixtures
