#include "modal/sampling.hpp"

#include <algorithm>

namespace modal {

Formula random_formula(Rng& rng, int max_depth, const std::vector<Atom>& atoms) {
  if (max_depth <= 0 || rng.below(8) == 0) {
    // Leaves: mostly atoms, occasionally the constants.
    if (atoms.empty() || rng.below(6) == 0) {
      return rng.coin() ? Formula::bot() : Formula::top();
    }
    return Formula::atom(atoms[rng.below(atoms.size())]);
  }
  switch (rng.below(7)) {
    case 0: return Formula::neg(random_formula(rng, max_depth - 1, atoms));
    case 1:
      return Formula::disj(random_formula(rng, max_depth - 1, atoms),
                           random_formula(rng, max_depth - 1, atoms));
    case 2:
      return Formula::conj(random_formula(rng, max_depth - 1, atoms),
                           random_formula(rng, max_depth - 1, atoms));
    case 3:
      return Formula::imp(random_formula(rng, max_depth - 1, atoms),
                          random_formula(rng, max_depth - 1, atoms));
    case 4: return Formula::box(random_formula(rng, max_depth - 1, atoms));
    case 5: return Formula::diamond(random_formula(rng, max_depth - 1, atoms));
    default: {
      // Aim an atom/constant at the leaf to keep sizes small.
      if (atoms.empty()) return Formula::top();
      return Formula::atom(atoms[rng.below(atoms.size())]);
    }
  }
}

Substitution random_substitution(Rng& rng, const std::vector<Atom>& vars,
                                 const std::vector<Atom>& atoms, int max_depth) {
  Substitution s;
  for (const Atom& v : vars) {
    if (rng.coin()) s.set(v, random_formula(rng, max_depth, atoms));
  }
  return s;
}

Model random_symmetric_model(Rng& rng, int max_states, const std::vector<Atom>& atoms,
                             bool reflexive) {
  int n = rng.range(1, std::max(1, max_states));
  Model m;
  for (State s = 0; s < n; ++s) m.frame.states.push_back(s);
  for (State i = 0; i < n; ++i) {
    for (State j = i; j < n; ++j) {
      bool edge = i == j ? (reflexive || rng.coin()) : rng.below(3) < 1;
      if (edge) {
        m.frame.rel.emplace_back(i, j);
        if (i != j) m.frame.rel.emplace_back(j, i);
      }
    }
  }
  std::sort(m.frame.rel.begin(), m.frame.rel.end());
  for (const Atom& a : atoms) {
    std::vector<State> states;
    for (State s = 0; s < n; ++s) {
      if (rng.coin()) states.push_back(s);
    }
    if (!states.empty()) m.valuation[a] = std::move(states);
  }
  return m;
}

}  // namespace modal
