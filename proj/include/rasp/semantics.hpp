#pragma once

#include "rasp/wellsupport.hpp"

namespace rasp {

struct NotNormalError : Error {
  using Error::Error;
};
struct NotAtomicHeadError : Error {
  using Error::Error;
};
struct BaseMismatchError : Error {
  using Error::Error;
};

enum class SemKind {
  Rational,
  Gl,
  GlNlp,
  Wj,
  Flp,
  Equilibrium,
  DiGlnlp,
  DiWj,
  ThreeValued,
  G91,
  Se16,
};

struct SemanticsId {
  SemKind kind = SemKind::Rational;
  std::optional<SemKind> base;  // Se16 only; must be an answer-set semantics

  bool operator==(const SemanticsId&) const = default;
};

// RATIONAL, GL, GL_NLP, WJ, FLP, EQUILIBRIUM, DI_GLNLP, DI_WJ, THREE_VALUED,
// G91, SE16(<base>); case-insensitive.
SemanticsId parse_semantics(const std::string& text);
std::string to_string(const SemanticsId& id);

struct WorldView {
  EpistemicModel model;
  std::vector<FormulaPtr> phi;  // exactly the epistemic negations true in model
};

bool world_view_equal(const WorldView& a, const WorldView& b);

struct ThreeValuedInterp {
  Interpretation i1, i2;  // i1 ⊆ i2 for well-formed interpretations
  bool operator==(const ThreeValuedInterp&) const = default;
};

enum class Tv { False = 0, Undef = 1, True = 2 };

inline constexpr size_t kDefaultMaxAtoms = 20;

// Answer-set enumerations search all models of p; the cap guards the
// exhaustive enumeration. Outputs are in canonical model order (ascending
// bitmask over the sorted signature).
std::vector<Interpretation> rational_answer_sets(const Program& p,
                                                 size_t max_atoms = kDefaultMaxAtoms);
std::vector<Interpretation> wj_answer_sets(const Program& p,
                                           size_t max_atoms = kDefaultMaxAtoms);
std::vector<Interpretation> gl_nlp_answer_sets(const Program& p,
                                               size_t max_atoms = kDefaultMaxAtoms);
std::vector<Interpretation> gl_answer_sets(const Program& p,
                                           size_t max_atoms = kDefaultMaxAtoms);
std::vector<Interpretation> flp_answer_sets(const Program& p,
                                            size_t max_atoms = kDefaultMaxAtoms);
std::vector<Interpretation> equilibrium_answer_sets(const Program& p,
                                                    size_t max_atoms = kDefaultMaxAtoms);
std::vector<Interpretation> di_answer_sets(const Program& p, const SemanticsId& base,
                                           size_t max_atoms = kDefaultMaxAtoms);
std::vector<Interpretation> three_valued_answer_sets(const Program& p,
                                                     size_t max_atoms = kDefaultMaxAtoms);

Tv three_valued_eval(const ThreeValuedInterp& tv, const FormulaPtr& f);
ThreeValuedInterp phi_op(const Program& p, const ThreeValuedInterp& tv);
ThreeValuedInterp stable_revision(const Program& p, const ThreeValuedInterp& tv);
// Iterates stable_revision from (i,i); nullopt when the iteration cycles
// without reaching a fixpoint.
std::optional<ThreeValuedInterp> stable_revision_fixpoint(const Program& p,
                                                          const Interpretation& i);
bool is_two_valued_stable(const Program& p, const Interpretation& i);

// World views are canonicalized by phi, then by model list.
std::vector<WorldView> rational_world_views(const Program& p,
                                            size_t max_atoms = kDefaultMaxAtoms);
std::vector<WorldView> se16_world_views(const Program& p, const SemanticsId& base,
                                        size_t max_atoms = kDefaultMaxAtoms);
std::vector<WorldView> g91_world_views(const Program& p, size_t max_atoms = kDefaultMaxAtoms);

// Dispatchers over SemanticsId; throw Error when the id is not of the asked
// kind (answer-set vs world-view semantics).
std::vector<Interpretation> answer_sets(const Program& p, const SemanticsId& sem,
                                        size_t max_atoms = kDefaultMaxAtoms);
std::vector<WorldView> world_views(const Program& p, const SemanticsId& sem,
                                   size_t max_atoms = kDefaultMaxAtoms);
bool is_world_view_semantics(const SemanticsId& sem);

}  // namespace rasp
