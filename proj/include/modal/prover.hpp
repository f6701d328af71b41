#ifndef MODAL_PROVER_HPP_
#define MODAL_PROVER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "modal/formula.hpp"
#include "modal/kripke.hpp"

namespace modal {

// Validity over symmetric / serial-symmetric / reflexive-symmetric frames.
enum class Logic { KB, KDB, KTB };

std::string_view to_string(Logic l);
Logic logic_from_string(std::string_view name);  // "kb" | "kdb" | "ktb"

bool frame_in_class(Logic l, const Frame& fr);

struct ProverConfig {
  // Tableau node budget (worlds created plus branch points explored).
  std::int64_t max_nodes = 1000000;
};

// Valid, or Invalid with a certified pointed countermodel, or Unknown when a
// resource bound ran out.  Invalid countermodels are finite, lie in the
// queried frame class and falsify the formula at the point; this is checked
// before the verdict is returned.
class Verdict {
 public:
  enum class Kind { Valid, Invalid, Unknown };

  static Verdict valid() { return Verdict(Kind::Valid); }
  static Verdict invalid(PointedModel counter);
  static Verdict unknown(std::string reason);

  Kind kind() const { return kind_; }
  bool is_valid() const { return kind_ == Kind::Valid; }
  bool is_invalid() const { return kind_ == Kind::Invalid; }
  bool is_unknown() const { return kind_ == Kind::Unknown; }

  const PointedModel& countermodel() const;
  const std::string& reason() const;

 private:
  explicit Verdict(Kind k) : kind_(k) {}
  Kind kind_;
  std::optional<PointedModel> counter_;
  std::string reason_;
};

std::string_view to_string(Verdict::Kind k);

// Decide validity of f over the frame class of l.  Valid answers come from a
// closed tableau; Invalid answers carry a model-checked countermodel; Unknown
// is only ever caused by the node budget.
Verdict decide(Logic l, const Formula& f, const ProverConfig& config = {});

// Independent small-model oracle: exhaustively enumerates pointed models of
// the frame class with up to max_states states and valuations over atoms(f),
// returning the first one that falsifies f.  Absence of a countermodel up to
// max_states does NOT certify validity.
struct OracleOutcome {
  enum class Kind { Found, NoneFound, BudgetExceeded };
  Kind kind = Kind::NoneFound;
  std::optional<PointedModel> model;       // set iff kind == Found
  std::int64_t candidates_checked = 0;
};

OracleOutcome brute_force_countermodel(Logic l, const Formula& f, int max_states = 4,
                                       std::int64_t max_candidates = 10000000);

}  // namespace modal

#endif  // MODAL_PROVER_HPP_
