#ifndef MODAL_KRIPKE_HPP_
#define MODAL_KRIPKE_HPP_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "modal/formula.hpp"

namespace modal {

using State = int;

// Finite frame: nonempty state set plus a relation over it.
struct Frame {
  std::vector<State> states;                    // sorted, unique
  std::vector<std::pair<State, State>> rel;     // sorted, unique, endpoints in states

  bool has_state(State s) const;
  bool related(State s, State t) const;
  void validate() const;  // throws std::invalid_argument on broken invariants
};

bool is_symmetric(const Frame& fr);
bool is_serial(const Frame& fr);
bool is_reflexive(const Frame& fr);

// Model: frame plus valuation.  Atoms absent from the map denote the empty
// set of states.
struct Model {
  Frame frame;
  std::map<Atom, std::vector<State>> valuation;  // each list sorted, unique

  bool atom_true_at(const Atom& a, State s) const;
  void validate() const;
};

struct PointedModel {
  Model model;
  State point = 0;

  void validate() const;
};

// Satisfaction per the usual clauses; derived connectives evaluate through
// their core expansions.  Throws std::out_of_range on an unknown state.
bool satisfies(const Model& m, State s, const Formula& f);

// True iff f is satisfied at every state.
bool is_true_in_model(const Model& m, const Formula& f);

// The explicit countermodel family: states 0..3k, neighbors at distance <= 1
// (hence reflexive and symmetric), p true at indices = 1 mod 3 and q at
// indices = 2 mod 3.
Model chain_model(int k);

// Tagged union of models with injections from each input's states into the
// result, so callers can locate original states.
struct DisjointUnion {
  Model model;
  std::vector<std::unordered_map<State, State>> injections;
};
DisjointUnion disjoint_union(const std::vector<Model>& models);

enum class UnravelMode { Plain, Reflexive };

class StateBudgetError : public std::runtime_error {
 public:
  explicit StateBudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Depth-bounded tree unfolding of (m, around) whose relation is the symmetric
// closure of the tree edges; reflexive mode adds every self-loop.  States are
// the nonempty paths from `around` of at most `depth` steps, materialized in
// `paths`; the valuation is pulled back along the last element.
//
// Contract: for every formula f with degree(f) <= depth, satisfaction of f at
// the root of the unravelling equals satisfaction at `around` in m.  Callers
// that evaluate at an interior state at distance d need depth >= d + degree(f).
struct Unravelling {
  PointedModel pointed;
  std::vector<std::vector<State>> paths;  // index = state id in pointed.model
};
Unravelling symmetric_unravelling(const Model& m, State around, int depth, UnravelMode mode,
                                  std::size_t state_budget = 1000000);

// JSON schema: {"states":[int...], "rel":[[int,int]...],
//               "val":{"atom":[int...]...}, "point":int?}
// Atom names use the concrete syntax ("#p" for parameters, bare variables).
nlohmann::ordered_json model_to_json(const Model& m);
nlohmann::ordered_json pointed_model_to_json(const PointedModel& pm);
Model model_from_json(const nlohmann::json& j);
PointedModel pointed_model_from_json(const nlohmann::json& j);

}  // namespace modal

#endif  // MODAL_KRIPKE_HPP_
