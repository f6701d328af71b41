#ifndef MODAL_SAMPLING_HPP_
#define MODAL_SAMPLING_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "modal/formula.hpp"
#include "modal/kripke.hpp"
#include "modal/substitution.hpp"

namespace modal {

// Deterministic random source.  Bounded draws go through modulo reduction on
// the raw mt19937_64 stream so sequences are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  // Uniform-ish value in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : eng_() % bound; }
  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

// Random formula over the given atoms with bounded connective depth.
Formula random_formula(Rng& rng, int max_depth, const std::vector<Atom>& atoms);

// Random substitution whose support is drawn from `vars` and whose images are
// random formulas over `atoms`.
Substitution random_substitution(Rng& rng, const std::vector<Atom>& vars,
                                 const std::vector<Atom>& atoms, int max_depth);

// Random symmetric model over 1..max_states states; reflexive on request.
Model random_symmetric_model(Rng& rng, int max_states, const std::vector<Atom>& atoms,
                             bool reflexive);

}  // namespace modal

#endif  // MODAL_SAMPLING_HPP_
