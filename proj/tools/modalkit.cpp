// Command line front end: decide validity, manipulate substitutions, generate
// the suite constructions, and run the lemma verification suite.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modal/constructions.hpp"
#include "modal/harness.hpp"
#include "modal/kripke.hpp"
#include "modal/prover.hpp"
#include "modal/substitution.hpp"

namespace {

using nlohmann::ordered_json;

modal::Substitution subst_from_arg(const std::string& arg) {
  return modal::Substitution::from_json(nlohmann::json::parse(arg));
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open '" + path + "'");
  return nlohmann::json::parse(in);
}

int run_decide(const std::string& logic_name, const std::string& formula_text, bool as_json,
               std::int64_t max_nodes) {
  modal::Logic logic = modal::logic_from_string(logic_name);
  modal::Formula f = modal::parse(formula_text);
  modal::ProverConfig cfg;
  cfg.max_nodes = max_nodes;
  modal::Verdict v = modal::decide(logic, f, cfg);
  if (as_json) {
    ordered_json j;
    j["verdict"] = modal::to_string(v.kind());
    if (v.is_invalid()) j["countermodel"] = modal::pointed_model_to_json(v.countermodel());
    if (v.is_unknown()) j["reason"] = v.reason();
    std::cout << j.dump(2) << "\n";
  } else {
    switch (v.kind()) {
      case modal::Verdict::Kind::Valid:
        std::cout << "valid\n";
        break;
      case modal::Verdict::Kind::Invalid:
        std::cout << "invalid\ncountermodel: "
                  << modal::pointed_model_to_json(v.countermodel()).dump() << "\n";
        break;
      case modal::Verdict::Kind::Unknown:
        std::cout << "unknown: " << v.reason() << "\n";
        break;
    }
  }
  switch (v.kind()) {
    case modal::Verdict::Kind::Valid: return 0;
    case modal::Verdict::Kind::Invalid: return 1;
    case modal::Verdict::Kind::Unknown: return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for unification over the symmetric modal logics kb, kdb and ktb"};
  app.require_subcommand(1);

  // decide ------------------------------------------------------------------
  std::string logic_name = "kb";
  std::string formula_text;
  bool as_json = false;
  std::int64_t max_nodes = modal::ProverConfig{}.max_nodes;
  auto* decide_cmd = app.add_subcommand("decide", "decide validity of a formula");
  decide_cmd->add_option("--logic", logic_name, "kb, kdb or ktb")->capture_default_str();
  decide_cmd->add_option("--formula", formula_text, "formula text")->required();
  decide_cmd->add_flag("--json", as_json, "print a JSON verdict");
  decide_cmd->add_option("--max-nodes", max_nodes, "tableau node budget")->capture_default_str();

  // subst -------------------------------------------------------------------
  auto* subst_cmd = app.add_subcommand("subst", "substitution operations");
  subst_cmd->require_subcommand(1);
  std::string subst_json, first_json, second_json, subst_formula, subst_logic = "kb";

  auto* apply_cmd = subst_cmd->add_subcommand("apply", "apply a substitution to a formula");
  apply_cmd->add_option("--map", subst_json, "substitution JSON {\"map\":{...}}")->required();
  apply_cmd->add_option("--formula", subst_formula, "formula text")->required();

  auto* compose_cmd = subst_cmd->add_subcommand("compose", "compose two substitutions");
  compose_cmd->add_option("--first", first_json, "substitution applied first")->required();
  compose_cmd->add_option("--second", second_json, "substitution applied second")->required();

  auto* equiv_cmd = subst_cmd->add_subcommand("equiv", "test substitution equivalence");
  equiv_cmd->add_option("--logic", subst_logic, "kb, kdb or ktb")->capture_default_str();
  equiv_cmd->add_option("--first", first_json, "substitution JSON")->required();
  equiv_cmd->add_option("--second", second_json, "substitution JSON")->required();

  auto* unifier_cmd = subst_cmd->add_subcommand("unifier", "test whether a substitution unifies");
  unifier_cmd->add_option("--logic", subst_logic, "kb, kdb or ktb")->capture_default_str();
  unifier_cmd->add_option("--map", subst_json, "substitution JSON")->required();
  unifier_cmd->add_option("--formula", subst_formula, "formula text")->required();

  // gen ---------------------------------------------------------------------
  auto* gen_cmd = app.add_subcommand("gen", "generate the suite constructions");
  gen_cmd->require_subcommand(1);
  int gen_k = 0;
  bool gen_reflexive = false;
  int gen_depth = -1;
  std::string left_path, right_path;

  auto* gen_sigma = gen_cmd->add_subcommand("sigma", "level substitution sigma_k");
  gen_sigma->add_option("--k", gen_k, "level")->required();
  auto* gen_tau = gen_cmd->add_subcommand("tau", "level substitution tau_k");
  gen_tau->add_option("--k", gen_k, "level")->required();
  auto* gen_lambda = gen_cmd->add_subcommand("lambda", "closed form lambda_k");
  gen_lambda->add_option("--k", gen_k, "level")->required();
  auto* gen_mu = gen_cmd->add_subcommand("mu", "closed form mu_k");
  gen_mu->add_option("--k", gen_k, "level")->required();
  gen_cmd->add_subcommand("phi", "the suite goal formula");
  auto* gen_chain = gen_cmd->add_subcommand("chain", "chain countermodel with 3k+1 states");
  gen_chain->add_option("--k", gen_k, "level")->required();
  auto* gen_bridge = gen_cmd->add_subcommand("bridge", "join two pointed models through t and u");
  gen_bridge->add_option("--left", left_path, "pointed model JSON file (plus side)")->required();
  gen_bridge->add_option("--right", right_path, "pointed model JSON file (minus side)")->required();
  gen_bridge->add_option("--k", gen_k, "witness path level")->required();
  gen_bridge->add_flag("--reflexive", gen_reflexive, "reflexive unravelling mode");
  gen_bridge->add_option("--depth", gen_depth, "unravelling depth override");

  // lemmas ------------------------------------------------------------------
  auto* lemmas_cmd = app.add_subcommand("lemmas", "lemma verification suite");
  lemmas_cmd->require_subcommand(1);
  std::string lemmas_logic = "kb", json_out, show_id;
  int k_max = 2, l_max = 2;
  std::uint64_t seed = 0;

  auto* lemmas_run = lemmas_cmd->add_subcommand("run", "run the whole registry");
  lemmas_run->add_option("--logic", lemmas_logic, "kb, kdb or ktb")->capture_default_str();
  lemmas_run->add_option("--k-max", k_max, "level bound")->capture_default_str();
  lemmas_run->add_option("--l-max", l_max, "second level bound")->capture_default_str();
  lemmas_run->add_option("--seed", seed, "seed for sampled checks")->capture_default_str();
  lemmas_run->add_option("--json", json_out, "write the report to this file");
  lemmas_run->add_option("--max-nodes", max_nodes, "tableau node budget")->capture_default_str();

  auto* lemmas_show = lemmas_cmd->add_subcommand("show", "describe one registry entry");
  lemmas_show->add_option("id", show_id, "registry id")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (decide_cmd->parsed()) {
      return run_decide(logic_name, formula_text, as_json, max_nodes);
    }
    if (apply_cmd->parsed()) {
      std::cout << modal::print(subst_from_arg(subst_json).apply(modal::parse(subst_formula)))
                << "\n";
      return 0;
    }
    if (compose_cmd->parsed()) {
      auto composed = modal::compose(subst_from_arg(first_json), subst_from_arg(second_json));
      std::cout << composed.to_json().dump(2) << "\n";
      return 0;
    }
    if (equiv_cmd->parsed()) {
      modal::Ternary t = modal::equivalent(modal::logic_from_string(subst_logic),
                                           subst_from_arg(first_json),
                                           subst_from_arg(second_json));
      std::cout << modal::to_string(t) << "\n";
      return t == modal::Ternary::True ? 0 : t == modal::Ternary::False ? 1 : 2;
    }
    if (unifier_cmd->parsed()) {
      modal::Ternary t = modal::is_unifier(modal::logic_from_string(subst_logic),
                                           subst_from_arg(subst_json),
                                           modal::parse(subst_formula));
      std::cout << modal::to_string(t) << "\n";
      return t == modal::Ternary::True ? 0 : t == modal::Ternary::False ? 1 : 2;
    }
    if (gen_sigma->parsed()) {
      std::cout << modal::sigma_subst(gen_k).to_json().dump(2) << "\n";
      return 0;
    }
    if (gen_tau->parsed()) {
      std::cout << modal::tau_subst(gen_k).to_json().dump(2) << "\n";
      return 0;
    }
    if (gen_lambda->parsed()) {
      std::cout << modal::lambda_subst(gen_k).to_json().dump(2) << "\n";
      return 0;
    }
    if (gen_mu->parsed()) {
      std::cout << modal::mu_subst(gen_k).to_json().dump(2) << "\n";
      return 0;
    }
    if (gen_cmd->get_subcommand("phi")->parsed()) {
      std::cout << modal::print(modal::nullary_formula()) << "\n";
      return 0;
    }
    if (gen_chain->parsed()) {
      std::cout << modal::model_to_json(modal::chain_model(gen_k)).dump(2) << "\n";
      return 0;
    }
    if (gen_bridge->parsed()) {
      modal::PointedModel left = modal::pointed_model_from_json(load_json_file(left_path));
      modal::PointedModel right = modal::pointed_model_from_json(load_json_file(right_path));
      modal::Bridge b = modal::bridge_model(
          left, right, gen_k,
          gen_reflexive ? modal::UnravelMode::Reflexive : modal::UnravelMode::Plain, gen_depth);
      ordered_json j;
      j["model"] = modal::model_to_json(b.model);
      j["left_root"] = b.left_root;
      j["right_root"] = b.right_root;
      j["left_end"] = b.left_end;
      j["right_end"] = b.right_end;
      j["t"] = b.t_state;
      j["u"] = b.u_state;
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (lemmas_run->parsed()) {
      modal::SuiteConfig cfg;
      cfg.logic = modal::logic_from_string(lemmas_logic);
      cfg.k_max = k_max;
      cfg.l_max = l_max;
      cfg.seed = seed;
      cfg.prover.max_nodes = max_nodes;
      modal::LemmaReport report = modal::run_suite(cfg);
      int pass = 0, fail = 0, indet = 0;
      for (const modal::LemmaCheck& c : report.checks) {
        switch (c.status) {
          case modal::CheckStatus::Pass: ++pass; break;
          case modal::CheckStatus::Fail: ++fail; break;
          case modal::CheckStatus::Indeterminate: ++indet; break;
        }
        std::cout << to_string(c.status) << "  " << c.id << "  " << c.params.dump() << "\n";
      }
      std::cout << "total " << report.checks.size() << ": " << pass << " pass, " << fail
                << " fail, " << indet << " indeterminate\n";
      if (!json_out.empty()) {
        std::ofstream out(json_out);
        out << report.to_json().dump(2) << "\n";
      }
      return report.all_passed() ? 0 : 1;
    }
    if (lemmas_show->parsed()) {
      const modal::RegistryEntry& e = modal::registry_entry(show_id);
      std::cout << "id:      " << e.id << "\n";
      std::cout << "summary: " << e.summary << "\n";
      std::cout << "scope:   " << e.scope << "\n";
      if (e.instances) {
        modal::SuiteConfig cfg;
        std::cout << "instances at defaults:\n";
        for (const auto& params : e.instances(cfg)) {
          std::cout << "  " << params.dump() << "\n";
        }
      } else {
        std::cout << "instances: none (not executable)\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
