#pragma once

#include <map>

#include "rasp/logic.hpp"

namespace rasp {

struct NotSimpleError : Error {
  using Error::Error;
};
struct NotEpistemicModelError : Error {
  using Error::Error;
};
struct PhiNotSubsetError : Error {
  using Error::Error;
};
struct NotSpecificationError : Error {
  using Error::Error;
};
struct SelectionMismatchError : Error {
  using Error::Error;
};

// Per-rule choice of one head formula, anchored to an interpretation. kBot
// marks a rule none of whose head formulas is satisfied; anchored to a model
// every satisfied-body rule has a satisfied head, so real indices appear.
struct HeadSelection {
  static constexpr int kBot = -1;
  std::map<int, int> choice;  // rule id -> 0-based head index, or kBot
};

struct EpistemicReduct {
  Program program;                // epistemic-free
  std::vector<FormulaPtr> phi;    // the true epistemic negations, canonical order
};

// All reducts preserve the source signature: dropping rules or formulas never
// shrinks the vocabulary the semantics enumerate over.

// Drop rules with a negated atom true in i, strip the remaining negative
// literals.
Program gl_reduct(const Program& p, const Interpretation& i);

// Rules whose body i satisfies, unchanged.
Program flp_reduct(const Program& p, const Interpretation& i);

FormulaPtr ferraris_reduct(const FormulaPtr& f, const Interpretation& i);

// not F becomes ⊤ when F is false in some member of a, ¬F otherwise; phi
// records the substituted-true negations.
EpistemicReduct epistemic_reduct(const Program& p, const EpistemicModel& a);

// As epistemic_reduct with an arbitrary phi ⊆ Ep(p) instead of one anchored
// to a model.
Program se16_reduct(const Program& p, const std::vector<FormulaPtr>& phi);

// Maximal body subformulas of shape (¬)EpNot(A) or (¬)EpNot(¬A), canonical
// order. Only valid on specifications (see g91_modal_reduct).
std::vector<FormulaPtr> modal_literals(const Program& p);

using ModalTruth = std::map<FormulaPtr, bool, FormulaLess>;

// Drop rules containing a false modal literal, delete the remaining modal
// literals from the surviving bodies.
Program g91_modal_reduct(const Program& p, const EpistemicModel& a);
Program g91_reduct_under(const Program& p, const ModalTruth& truth);

// {sel(rule) ← body : i satisfies body}; original rule ids.
Program disjunctive_reduct(const Program& p, const Interpretation& i, const HeadSelection& sel);

// Cartesian product over satisfied-body rules of their i-satisfied head
// formulas (structural duplicates collapse); lexicographic by rule id, head
// index.
std::vector<HeadSelection> enumerate_selections(const Program& p, const Interpretation& i);

// Mutual matching by logical equivalence of the two head formula lists.
bool variant_heads(const std::vector<FormulaPtr>& h1, const std::vector<FormulaPtr>& h2);

// Selections that assign logically equivalent formulas to variant heads, and
// literally the same choice to identical heads. One selection per choice of
// equivalence class, so the output is a subset of enumerate_selections up to
// equivalence of the chosen formulas.
std::vector<HeadSelection> enumerate_variant_selections(const Program& p, const Interpretation& i);

}  // namespace rasp
