#pragma once

#include <random>

#include "rasp/syntax.hpp"

namespace rasp {

// Seeded program generators for randomized sweeps. All draw atoms from the
// pool x1..x<num_atoms>; every program's signature is the full pool so that
// enumeration spaces stay comparable across semantics.

Program random_simple_normal(std::mt19937& rng, int num_atoms, int num_rules);
Program random_simple_disjunctive(std::mt19937& rng, int num_atoms, int num_rules,
                                  int max_heads);
// Single-head rules with arbitrary classical formulas on both sides.
Program random_normal(std::mt19937& rng, int num_atoms, int num_rules);
// Simple rules whose bodies may carry subjective literals; the distinct
// epistemic negations are drawn from a pool of at most max_ep formulas.
Program random_epistemic(std::mt19937& rng, int num_atoms, int num_rules, int max_ep);

}  // namespace rasp
