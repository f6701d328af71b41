#ifndef MODAL_SUBSTITUTION_HPP_
#define MODAL_SUBSTITUTION_HPP_

#include <initializer_list>
#include <map>
#include <utility>

#include <json.hpp>

#include "modal/formula.hpp"
#include "modal/prover.hpp"

namespace modal {

// Three-valued result of a prover-backed check: Unknown propagates resource
// exhaustion and is distinct from False.
enum class Ternary { False, True, Unknown };

std::string_view to_string(Ternary t);

// Finite-support map from variables to formulas, identity elsewhere.
// Parameters are never replaced; identity entries are normalized away so the
// support is canonical.
class Substitution {
 public:
  Substitution() = default;  // identity
  Substitution(std::initializer_list<std::pair<Atom, Formula>> entries);

  static Substitution identity() { return Substitution(); }

  // Throws std::invalid_argument when var is a parameter.
  void set(const Atom& var, Formula image);

  const std::map<Atom, Formula>& support() const { return map_; }
  bool is_identity() const { return map_.empty(); }
  Formula image(const Atom& var) const;  // var itself when outside the support

  // Simultaneous replacement of variables by their images; parameters and
  // false untouched, homomorphic through ~, |, [].
  Formula apply(const Formula& f) const;

  bool operator==(const Substitution& other) const { return map_ == other.map_; }

  nlohmann::ordered_json to_json() const;  // {"map":{"x":"<formula text>"}}
  static Substitution from_json(const nlohmann::json& j);

 private:
  std::map<Atom, Formula> map_;
};

// (s then t): maps each variable x to apply(t, s(x)).
Substitution compose(const Substitution& s, const Substitution& t);

// Image agrees with s on variables(f), identity elsewhere.
Substitution restrict_to(const Substitution& s, const Formula& f);

// s and t are equivalent in l when (s(x) <-> t(x)) is valid for every x in
// the union of the supports; off-support variables agree syntactically.
Ternary equivalent(Logic l, const Substitution& s, const Substitution& t,
                   const ProverConfig& config = {});

// Checks the claimed witness w for "s is more general than t":
// compose(s, w) must be equivalent to t.
Ternary more_general_with_witness(Logic l, const Substitution& s, const Substitution& t,
                                  const Substitution& w, const ProverConfig& config = {});

// s unifies f in l when apply(s, f) is valid.
Ternary is_unifier(Logic l, const Substitution& s, const Formula& f,
                   const ProverConfig& config = {});

}  // namespace modal

#endif  // MODAL_SUBSTITUTION_HPP_
