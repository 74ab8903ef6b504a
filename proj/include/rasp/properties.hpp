#pragma once

#include "rasp/semantics.hpp"

namespace rasp {

struct NotConstraintError : Error {
  using Error::Error;
};
struct FragmentError : Error {
  using Error::Error;
};

enum class PropertyId { MM, FN, WFN, CM, SCM };

std::string to_string(PropertyId id);
PropertyId parse_property(const std::string& text);

// Simple case: x is a nonempty subset of the interpretation. Epistemic case:
// pairs (X, I) with X intersecting I and I a member of the world view's model.
struct UnfoundedWitness {
  std::set<Atom> x;
  std::vector<std::pair<std::set<Atom>, Interpretation>> pairs;
};

struct PropertyReport {
  PropertyId property = PropertyId::MM;
  bool holds = true;
  std::optional<Interpretation> as_witness;     // offending answer set (MM, FN, CM)
  std::optional<Interpretation> smaller_model;  // MM: proper-subset model of as_witness
  std::optional<EpistemicModel> wv_witness;     // offending world-view model (WFN, SCM)
  std::optional<UnfoundedWitness> unfounded;    // FN, WFN
};

// All nonempty X ⊆ i such that no rule whose head meets X fires externally:
// (f1) i satisfies the body, (f2) the positive body avoids X, (f3) the head
// outside X is false in i. Enumerated as ascending bitmasks over i.
std::vector<UnfoundedWitness> unfounded_sets(const Program& p, const Interpretation& i);

inline constexpr size_t kDefaultMaxUnfoundedPairs = 2;

// Fragment: heads are atom disjunctions or ⊥; body conjuncts are objective
// A / ¬A / ¬¬A or subjective K L / ¬K L / ¬¬K L with L an objective literal.
// Double negation stays syntactic here: ¬¬A counts as a positive objective
// occurrence, ¬¬K A as a positive subjective one.
// Returns every unfounded set S of at most max_pairs pairs ⟨X,I⟩ with
// X ⊆ signature, X∩I ≠ ∅, I ∈ w: no rule whose head meets X satisfies
// (ef1) body true w.r.t. (w, I), (ef2) positive objective body avoiding X,
// (ef3) head outside X false in I, (ef4) positive subjective body avoiding
// every X' of S.
std::vector<UnfoundedWitness> epistemic_unfounded(const Program& p, const EpistemicModel& w,
                                                  size_t max_pairs = kDefaultMaxUnfoundedPairs);
bool is_wfn_founded(const Program& p, const EpistemicModel& w,
                    size_t max_pairs = kDefaultMaxUnfoundedPairs);

// Every answer set under sem is a minimal model of p.
PropertyReport check_mm(const Program& p, const SemanticsId& sem,
                        size_t max_atoms = kDefaultMaxAtoms);

// No answer set under sem contains a nonempty unfounded set.
PropertyReport check_fn(const Program& p, const SemanticsId& sem,
                        size_t max_atoms = kDefaultMaxAtoms);

// No world view's model under sem carries an unfounded set of pairs.
PropertyReport check_wfn(const Program& p, const SemanticsId& sem,
                         size_t max_atoms = kDefaultMaxAtoms,
                         size_t max_pairs = kDefaultMaxUnfoundedPairs);

// Adding the constraint only filters: every answer set of p∪{c} is an answer
// set of p satisfying c.
PropertyReport check_cm(const Program& p, const Rule& c, const SemanticsId& sem,
                        size_t max_atoms = kDefaultMaxAtoms);

// World-view version over a subjective constraint (a conjunction of modal
// literals); world views are compared by their models since phi ranges over
// different epistemic negations once c is added.
PropertyReport check_scm(const Program& p, const Rule& c, const SemanticsId& sem,
                         size_t max_atoms = kDefaultMaxAtoms);

}  // namespace rasp
