#ifndef MODAL_CONSTRUCTIONS_HPP_
#define MODAL_CONSTRUCTIONS_HPP_

#include <vector>

#include "modal/formula.hpp"
#include "modal/kripke.hpp"
#include "modal/substitution.hpp"

namespace modal {

// The whole substitution family lives over the single suite variable x.
const Atom& suite_variable();

// sigma_0(x) = false, sigma_{k+1}(x) = x & [+] sigma_k(x).
Substitution sigma_subst(int k);
// tau_0(x) = true, tau_{k+1}(x) = ~(~x & [-] ~tau_k(x)).
Substitution tau_subst(int k);
// lambda_k(x) = x & [+^k] false.
Substitution lambda_subst(int k);
// mu_k(x) = ~(~x & [-^k] false).
Substitution mu_subst(int k);

// (x -> [+] x) & (~x -> [-] ~x): unifiable, and the goal of the whole suite.
Formula nullary_formula();

enum class Polarity { Plus, Minus };

// A labelled path v0, t1, u1, v1, ..., tk, uk, vk in a host model witnessing
// the failure of [+^k] false (plus) or [-^k] false (minus) at v0.  Each
// consecutive pair is related; v-states carry ~p & ~q, and the t/u states
// carry the polarity's p/q pattern.
struct WitnessPath {
  std::vector<State> states;  // 3k + 1 entries
  Polarity polarity = Polarity::Plus;
};

// Finds a witness path rooted at s by depth-first search over the guard
// pattern, taking smallest state identifiers first.  Preconditions: the
// model is symmetric, s falsifies the level-k formula of the polarity and
// satisfies ~p & ~q; violations raise std::invalid_argument.
WitnessPath extract_witness_path(const Model& m, State s, int k, Polarity polarity);

// The two-sided construction: both inputs are unravelled around their points
// (depth 6k + 2 unless overridden), joined disjointly, and two fresh states
// t (p true) and u (q true) are linked t<->u with self-loops, t to the plus
// witness path's endpoint and u to the minus one's.
struct Bridge {
  Model model;
  State left_root = 0;   // unravelling root of the plus-side input
  State right_root = 0;  // unravelling root of the minus-side input
  State left_end = 0;    // plus witness path endpoint inside the bridge
  State right_end = 0;   // minus witness path endpoint inside the bridge
  State t_state = 0;
  State u_state = 0;
};

Bridge bridge_model(const PointedModel& plus_side, const PointedModel& minus_side, int k,
                    UnravelMode mode, int depth_override = -1,
                    std::size_t state_budget = 1000000);

}  // namespace modal

#endif  // MODAL_CONSTRUCTIONS_HPP_
