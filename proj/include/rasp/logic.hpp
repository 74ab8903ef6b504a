#pragma once

#include "rasp/syntax.hpp"

namespace rasp {

struct EpistemicProgramError : Error {
  using Error::Error;
};

using Interpretation = std::set<Atom>;
using Theory = std::vector<FormulaPtr>;
// Nonempty collection of interpretations; kept sorted and deduplicated by the
// routines that construct one.
using EpistemicModel = std::vector<Interpretation>;

std::string print_interpretation(const Interpretation& i);
std::string print_epistemic_model(const EpistemicModel& a);

bool is_subset(const Interpretation& a, const Interpretation& b);

class SatBackend {
 public:
  virtual ~SatBackend() = default;
  // True iff some subset of sig satisfies every formula in t. Formulas must
  // be classical and ground.
  virtual bool satisfiable(const Theory& t, const std::set<Atom>& sig) = 0;
};

// Unit propagation followed by assignment enumeration over the remaining
// atoms. Complete for the signature sizes this library targets.
class ExhaustiveBackend final : public SatBackend {
 public:
  bool satisfiable(const Theory& t, const std::set<Atom>& sig) override;
};

SatBackend& default_backend();

bool satisfies(const Interpretation& i, const FormulaPtr& f);
bool satisfies(const Interpretation& i, const Theory& t);
bool satisfies_rule(const Interpretation& i, const Rule& r);

bool entails(const Theory& t, const FormulaPtr& f);
bool entails(const Theory& t, const FormulaPtr& f, SatBackend& backend);

// All satisfying interpretations in canonical order: sig ascending, the first
// atom is the least significant bit, assignments enumerated as ascending
// bitmasks.
std::vector<Interpretation> models(const Theory& t, const std::set<Atom>& sig);

bool is_model(const Program& p, const Interpretation& i);
std::vector<Interpretation> models(const Program& p);
std::vector<Interpretation> minimal_models(const Program& p);
bool is_minimal_model(const Program& p, const Interpretation& i);

bool equivalent(const FormulaPtr& a, const FormulaPtr& b);

// Satisfaction w.r.t. an epistemic model: `not G` is true iff G fails in some
// member of a; after that substitution the formula is evaluated classically
// in i.
bool ep_satisfies(const EpistemicModel& a, const Interpretation& i, const FormulaPtr& f);
bool is_epistemic_model(const Program& p, const EpistemicModel& a);

}  // namespace rasp
