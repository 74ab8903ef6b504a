#include "rasp/devtools.hpp"

#include <algorithm>

namespace rasp {

namespace {

std::vector<Atom> atom_pool(int num_atoms) {
  std::vector<Atom> out;
  out.reserve(static_cast<size_t>(num_atoms));
  for (int k = 1; k <= num_atoms; ++k) out.push_back({"x" + std::to_string(k), {}});
  return out;
}

int draw(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

FormulaPtr random_literal(std::mt19937& rng, const std::vector<Atom>& pool) {
  FormulaPtr a = f_atom(pool[static_cast<size_t>(draw(rng, 0, static_cast<int>(pool.size()) - 1))]);
  return draw(rng, 0, 1) ? a : f_not(a);
}

FormulaPtr random_conjunction(std::mt19937& rng, const std::vector<Atom>& pool, int max_lits) {
  std::vector<FormulaPtr> lits;
  int n = draw(rng, 0, max_lits);
  for (int k = 0; k < n; ++k) lits.push_back(random_literal(rng, pool));
  return conjoin(lits);
}

FormulaPtr random_formula(std::mt19937& rng, const std::vector<Atom>& pool, int depth) {
  if (depth == 0 || draw(rng, 0, 2) == 0) {
    int c = draw(rng, 0, 19);
    if (c == 0) return f_top();
    if (c == 1) return f_bot();
    return f_atom(pool[static_cast<size_t>(draw(rng, 0, static_cast<int>(pool.size()) - 1))]);
  }
  switch (draw(rng, 0, 3)) {
    case 0:
      return f_not(random_formula(rng, pool, depth - 1));
    case 1:
      return f_and(random_formula(rng, pool, depth - 1), random_formula(rng, pool, depth - 1));
    case 2:
      return f_or(random_formula(rng, pool, depth - 1), random_formula(rng, pool, depth - 1));
    default:
      return f_implies(random_formula(rng, pool, depth - 1),
                       random_formula(rng, pool, depth - 1));
  }
}

std::set<Atom> pool_signature(const std::vector<Atom>& pool) {
  return {pool.begin(), pool.end()};
}

}  // namespace

Program random_simple_normal(std::mt19937& rng, int num_atoms, int num_rules) {
  std::vector<Atom> pool = atom_pool(num_atoms);
  std::vector<Rule> rules;
  for (int k = 0; k < num_rules; ++k) {
    Rule r;
    r.id = k + 1;
    r.heads = {f_atom(pool[static_cast<size_t>(draw(rng, 0, num_atoms - 1))])};
    r.body = random_conjunction(rng, pool, 3);
    rules.push_back(std::move(r));
  }
  return make_program(std::move(rules), pool_signature(pool));
}

Program random_simple_disjunctive(std::mt19937& rng, int num_atoms, int num_rules,
                                  int max_heads) {
  std::vector<Atom> pool = atom_pool(num_atoms);
  std::vector<Rule> rules;
  for (int k = 0; k < num_rules; ++k) {
    Rule r;
    r.id = k + 1;
    std::vector<Atom> shuffled = pool;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    int heads = draw(rng, 1, std::min(max_heads, num_atoms));
    for (int h = 0; h < heads; ++h) r.heads.push_back(f_atom(shuffled[static_cast<size_t>(h)]));
    r.body = random_conjunction(rng, pool, 2);
    rules.push_back(std::move(r));
  }
  return make_program(std::move(rules), pool_signature(pool));
}

Program random_normal(std::mt19937& rng, int num_atoms, int num_rules) {
  std::vector<Atom> pool = atom_pool(num_atoms);
  std::vector<Rule> rules;
  for (int k = 0; k < num_rules; ++k) {
    Rule r;
    r.id = k + 1;
    // Mostly atomic heads; occasionally a compound formula.
    r.heads = {draw(rng, 0, 9) < 8
                   ? f_atom(pool[static_cast<size_t>(draw(rng, 0, num_atoms - 1))])
                   : random_formula(rng, pool, 1)};
    r.body = random_formula(rng, pool, 2);
    rules.push_back(std::move(r));
  }
  return make_program(std::move(rules), pool_signature(pool));
}

Program random_epistemic(std::mt19937& rng, int num_atoms, int num_rules, int max_ep) {
  std::vector<Atom> pool = atom_pool(num_atoms);
  std::vector<FormulaPtr> ep_args;
  int want = draw(rng, 1, max_ep);
  for (int k = 0; k < want; ++k) ep_args.push_back(random_literal(rng, pool));
  std::vector<Rule> rules;
  for (int k = 0; k < num_rules; ++k) {
    Rule r;
    r.id = k + 1;
    r.heads = {f_atom(pool[static_cast<size_t>(draw(rng, 0, num_atoms - 1))])};
    std::vector<FormulaPtr> conjuncts;
    int objective = draw(rng, 0, 2);
    for (int c = 0; c < objective; ++c) conjuncts.push_back(random_literal(rng, pool));
    int subjective = draw(rng, 0, 2);
    for (int c = 0; c < subjective; ++c) {
      FormulaPtr ep = f_epnot(ep_args[static_cast<size_t>(
          draw(rng, 0, static_cast<int>(ep_args.size()) - 1))]);
      conjuncts.push_back(draw(rng, 0, 1) ? ep : f_not(ep));
    }
    r.body = conjoin(conjuncts);
    rules.push_back(std::move(r));
  }
  return make_program(std::move(rules), pool_signature(pool));
}

}  // namespace rasp
