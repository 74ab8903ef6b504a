#pragma once

#include <optional>

#include "rasp/reducts.hpp"

namespace rasp {

// A constraint fired during fixpoint iteration: the anchoring interpretation
// was not a model.
struct BotDerivedError : Error {
  using Error::Error;
};
struct NotModelError : Error {
  using Error::Error;
};

// q ≺ p stored as (q, p).
struct PartialOrder {
  std::set<std::pair<Atom, Atom>> pairs;
};

struct FormulaPairLess {
  bool operator()(const std::pair<FormulaPtr, FormulaPtr>& a,
                  const std::pair<FormulaPtr, FormulaPtr>& b) const {
    if (int c = formula_cmp(*a.first, *b.first)) return c < 0;
    return formula_cmp(*a.second, *b.second) < 0;
  }
};

// F ≺_h H stored as (F, H).
struct HeadOrder {
  std::set<std::pair<FormulaPtr, FormulaPtr>, FormulaPairLess> pairs;
};

struct WsWitness {
  PartialOrder order;
  HeadOrder head_order;
  std::optional<HeadSelection> selection;
  std::vector<Theory> lfp_stages;  // unpruned stages, ⊆-increasing
};

// {¬a : a in p's signature, a ∉ i}.
Theory negated_complement(const Program& p, const Interpretation& i);

// {head(r) : o ∪ n entails body(r)}, in rule order, structurally deduplicated.
Theory t_operator(const Program& p, const Theory& o, const Theory& n);

// Stages ∅ = T⁰, T¹, … ending at the fixpoint. With prune on, a head is only
// added when no logically equivalent formula is already present; the pruned
// and unpruned stages entail the same consequences.
std::vector<Theory> lfp_t(const Program& p, const Theory& n, bool prune = false);

// Fixpoint construction for atomic heads: Some(order) iff the fixpoint is
// exactly i. Each firing records q ≺ head(r) for the body atoms q already
// derived.
std::optional<PartialOrder> ws_check_atomic(const Program& p, const Interpretation& i);

// Fixpoint construction over head formulas: Some iff the pruned fixpoint
// together with ¬I⁻ entails every atom of i. Records F ≺_h head(r) for every
// F in the firing stage, and q ≺ p per stage transition (q entailed before,
// p first entailed after).
std::optional<WsWitness> ws_check_normal(const Program& p, const Interpretation& i);

// The unique well-supported set of rule heads: the pruned fixpoint.
Theory ws_heads(const Program& p, const Interpretation& i);

// First head selection (canonical enumeration order) whose reduct passes
// ws_check_normal; the witness carries that selection.
std::optional<WsWitness> ws_check_disjunctive(const Program& p, const Interpretation& i);
// Witnesses for every passing selection, in enumeration order.
std::vector<WsWitness> ws_all_witnesses(const Program& p, const Interpretation& i);

// Some iff every member of a passes ws_check_disjunctive against the
// epistemic reduct's program; one witness per member.
std::optional<std::map<Interpretation, WsWitness>> ws_check_epistemic(const Program& p,
                                                                      const EpistemicModel& a);

}  // namespace rasp
