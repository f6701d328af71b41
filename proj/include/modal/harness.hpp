#ifndef MODAL_HARNESS_HPP_
#define MODAL_HARNESS_HPP_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "modal/constructions.hpp"
#include "modal/prover.hpp"
#include "modal/substitution.hpp"

namespace modal {

enum class CheckStatus { Pass, Fail, Indeterminate };

std::string_view to_string(CheckStatus s);

struct SuiteConfig {
  Logic logic = Logic::KB;
  int k_max = 2;
  int l_max = 2;
  std::uint64_t seed = 0;
  ProverConfig prover;
};

// One executed registry instance: id, concrete parameter binding, outcome and
// the per-claim evidence (verdicts, countermodels, sampled data).
struct LemmaCheck {
  std::string id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  CheckStatus status = CheckStatus::Fail;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::array();
};

struct LemmaReport {
  SuiteConfig config;
  std::vector<LemmaCheck> checks;

  bool all_passed() const;
  // Schema: {"config":{...},"checks":[{"id":...,"params":...,"status":...,"evidence":...}]}
  nlohmann::ordered_json to_json() const;
};

// Registry of lemma checks keyed by stable identifiers.  Entries are either
// executable (instances + run) or explicit markers for content that is not
// machine-checkable (meta-theorems), which `lemmas show` surfaces but
// run_suite skips.
struct RegistryEntry {
  std::string id;
  std::string summary;
  std::string scope;  // "checked", "instance evidence, not proof", "out of scope: meta-theorem"
  std::function<std::vector<nlohmann::ordered_json>(const SuiteConfig&)> instances;
  std::function<LemmaCheck(const SuiteConfig&, const nlohmann::ordered_json&)> run;
};

const std::vector<RegistryEntry>& lemma_registry();
const RegistryEntry& registry_entry(const std::string& id);  // throws on unknown id

// Runs a single registry instance.  Throws std::invalid_argument for unknown
// ids and for entries that are not executable.
LemmaCheck verify_lemma(const std::string& id, const SuiteConfig& config,
                        const nlohmann::ordered_json& params);

// Executes the whole executable registry over every parameter combination
// within the config's bounds.  Failures and indeterminates are data, not
// errors; determinism: identical config and seed give identical report bytes.
LemmaReport run_suite(const SuiteConfig& config);

// Every decide-backed goal the suite submits at this config, with the
// predicted verdict; used for oracle cross-validation.
struct SuiteGoal {
  std::string id;
  std::string note;
  Formula goal;
  bool expect_valid;
};
std::vector<SuiteGoal> suite_goals(const SuiteConfig& config);

}  // namespace modal

#endif  // MODAL_HARNESS_HPP_
