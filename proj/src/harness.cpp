#include "modal/harness.hpp"

#include <algorithm>
#include <unordered_map>

#include "modal/sampling.hpp"

namespace modal {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

bool LemmaReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const LemmaCheck& c) { return c.status == CheckStatus::Pass; });
}

nlohmann::ordered_json LemmaReport::to_json() const {
  nlohmann::ordered_json j;
  j["config"] = {{"logic", to_string(config.logic)},
                 {"k_max", config.k_max},
                 {"l_max", config.l_max},
                 {"seed", config.seed},
                 {"max_nodes", config.prover.max_nodes}};
  auto arr = nlohmann::ordered_json::array();
  for (const LemmaCheck& c : checks) {
    arr.push_back({{"id", c.id},
                   {"params", c.params},
                   {"status", to_string(c.status)},
                   {"evidence", c.evidence}});
  }
  j["checks"] = std::move(arr);
  return j;
}

namespace {

using nlohmann::ordered_json;

CheckStatus combine(CheckStatus a, CheckStatus b) {
  if (a == CheckStatus::Fail || b == CheckStatus::Fail) return CheckStatus::Fail;
  if (a == CheckStatus::Indeterminate || b == CheckStatus::Indeterminate) {
    return CheckStatus::Indeterminate;
  }
  return CheckStatus::Pass;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

Rng make_rng(const SuiteConfig& cfg, const std::string& id, const ordered_json& params) {
  return Rng(cfg.seed * 0x9e3779b97f4a7c15ULL + fnv1a(id) + fnv1a(params.dump()));
}

Formula var_x() { return Formula::atom(suite_variable()); }

struct ProofGoal {
  std::string note;
  Formula goal;
  bool expect_valid;
};

ProofGoal goal(std::string note, Formula f, bool expect_valid) {
  return ProofGoal{std::move(note), std::move(f), expect_valid};
}

// Substitution equivalence over the suite families reduces to a single
// biconditional: every support here is contained in {x}.
ProofGoal equiv_goal(std::string note, const Substitution& a, const Substitution& b,
                     bool expect) {
  for (const auto& sub : {a, b}) {
    for (const auto& [v, img] : sub.support()) {
      if (!(v == suite_variable())) {
        throw std::logic_error("suite substitutions must have support within {x}");
      }
    }
  }
  return goal(std::move(note), Formula::iff(a.image(suite_variable()), b.image(suite_variable())),
              expect);
}

ProofGoal witness_goal(std::string note, const Substitution& s, const Substitution& t,
                       const Substitution& w, bool expect) {
  return equiv_goal(std::move(note), compose(s, w), t, expect);
}

void check_goal(const SuiteConfig& cfg, const ProofGoal& g, LemmaCheck& out) {
  Verdict v = decide(cfg.logic, g.goal, cfg.prover);
  ordered_json ev;
  ev["claim"] = g.note;
  ev["goal"] = print(g.goal);
  ev["expect"] = g.expect_valid ? "valid" : "invalid";
  ev["got"] = to_string(v.kind());
  CheckStatus st = CheckStatus::Fail;
  switch (v.kind()) {
    case Verdict::Kind::Valid:
      st = g.expect_valid ? CheckStatus::Pass : CheckStatus::Fail;
      break;
    case Verdict::Kind::Invalid:
      st = g.expect_valid ? CheckStatus::Fail : CheckStatus::Pass;
      ev["countermodel"] = pointed_model_to_json(v.countermodel());
      break;
    case Verdict::Kind::Unknown:
      st = CheckStatus::Indeterminate;
      ev["reason"] = v.reason();
      break;
  }
  out.status = combine(out.status, st);
  out.evidence.push_back(std::move(ev));
}

void check_bool(const std::string& claim, bool got, LemmaCheck& out, ordered_json detail = {}) {
  ordered_json ev;
  ev["claim"] = claim;
  ev["got"] = got;
  if (!detail.is_null()) ev["detail"] = std::move(detail);
  out.status = combine(out.status, got ? CheckStatus::Pass : CheckStatus::Fail);
  out.evidence.push_back(std::move(ev));
}

void check_ternary(const std::string& claim, Ternary got, bool expect, LemmaCheck& out) {
  ordered_json ev;
  ev["claim"] = claim;
  ev["expect"] = expect;
  ev["got"] = to_string(got);
  CheckStatus st;
  if (got == Ternary::Unknown) {
    st = CheckStatus::Indeterminate;
  } else {
    st = ((got == Ternary::True) == expect) ? CheckStatus::Pass : CheckStatus::Fail;
  }
  out.status = combine(out.status, st);
  out.evidence.push_back(std::move(ev));
}

LemmaCheck fresh_check(const std::string& id, const ordered_json& params) {
  LemmaCheck c;
  c.id = id;
  c.params = params;
  c.status = CheckStatus::Pass;
  return c;
}

std::vector<std::pair<std::string, Formula>> phi_pool(const SuiteConfig& cfg) {
  std::vector<std::pair<std::string, Formula>> pool = {
      {"false", Formula::bot()},
      {"true", Formula::top()},
      {"x", var_x()},
      {"#p", Formula::atom(param_p())},
  };
  for (int j = 0; j <= cfg.k_max; ++j) {
    pool.emplace_back("sigma_" + std::to_string(j) + "(x)",
                      sigma_subst(j).image(suite_variable()));
  }
  return pool;
}

Formula pool_member(const SuiteConfig& cfg, const std::string& name) {
  for (auto& [n, f] : phi_pool(cfg)) {
    if (n == name) return f;
  }
  throw std::invalid_argument("unknown pool formula '" + name + "'");
}

std::vector<std::pair<std::string, Substitution>> unifier_pool(const SuiteConfig& cfg) {
  std::vector<std::pair<std::string, Substitution>> pool;
  for (int j = 0; j <= cfg.k_max; ++j) {
    pool.emplace_back("sigma_" + std::to_string(j), sigma_subst(j));
    pool.emplace_back("tau_" + std::to_string(j), tau_subst(j));
  }
  return pool;
}

Substitution unifier_member(const SuiteConfig& cfg, const std::string& name) {
  for (auto& [n, s] : unifier_pool(cfg)) {
    if (n == name) return s;
  }
  throw std::invalid_argument("unknown unifier '" + name + "'");
}

// Degree-bounded random formulas for the locality checks.
Formula random_bounded(Rng& rng, int depth, int degree_budget, const std::vector<Atom>& atoms) {
  if (depth <= 0) {
    if (atoms.empty() || rng.below(5) == 0) return rng.coin() ? Formula::bot() : Formula::top();
    return Formula::atom(atoms[rng.below(atoms.size())]);
  }
  switch (rng.below(6)) {
    case 0: return Formula::neg(random_bounded(rng, depth - 1, degree_budget, atoms));
    case 1:
      return Formula::disj(random_bounded(rng, depth - 1, degree_budget, atoms),
                           random_bounded(rng, depth - 1, degree_budget, atoms));
    case 2:
      return Formula::conj(random_bounded(rng, depth - 1, degree_budget, atoms),
                           random_bounded(rng, depth - 1, degree_budget, atoms));
    case 3:
      return Formula::imp(random_bounded(rng, depth - 1, degree_budget, atoms),
                          random_bounded(rng, depth - 1, degree_budget, atoms));
    case 4:
      if (degree_budget >= 1) {
        return Formula::box(random_bounded(rng, depth - 1, degree_budget - 1, atoms));
      }
      [[fallthrough]];
    default:
      if (atoms.empty()) return Formula::top();
      return Formula::atom(atoms[rng.below(atoms.size())]);
  }
}

// A chain model with a few extra random states and edges glued on; the chain
// spine, its p/q labels and the witness paths survive the noise.
Model noised_chain(Rng& rng, int k, bool keep_reflexive) {
  Model m = chain_model(k);
  int base = 3 * k + 1;
  int extra = static_cast<int>(rng.below(3));
  for (int e = 0; e < extra; ++e) {
    State s = base + e;
    m.frame.states.push_back(s);
    if (keep_reflexive || rng.coin()) m.frame.rel.emplace_back(s, s);
    State attach = static_cast<State>(rng.below(static_cast<std::uint64_t>(s)));
    m.frame.rel.emplace_back(s, attach);
    m.frame.rel.emplace_back(attach, s);
    if (rng.below(3) == 0) m.valuation[param_p()].push_back(s);
    if (rng.below(3) == 0) m.valuation[param_q()].push_back(s);
  }
  std::vector<State> xs;
  for (State s : m.frame.states) {
    if (rng.coin()) xs.push_back(s);
  }
  if (!xs.empty()) m.valuation[Atom::variable("x")] = std::move(xs);
  std::sort(m.frame.rel.begin(), m.frame.rel.end());
  m.frame.rel.erase(std::unique(m.frame.rel.begin(), m.frame.rel.end()), m.frame.rel.end());
  for (auto& [a, states] : m.valuation) {
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
  }
  return m;
}

std::vector<ordered_json> k_instances(const SuiteConfig& cfg,
                                      std::initializer_list<const char*> families) {
  std::vector<ordered_json> out;
  for (int k = 0; k <= cfg.k_max; ++k) {
    for (const char* fam : families) {
      out.push_back({{"k", k}, {"family", fam}});
    }
  }
  return out;
}

std::vector<ordered_json> pair_instances(const SuiteConfig& cfg,
                                         std::initializer_list<const char*> families,
                                         bool keep(int, int)) {
  std::vector<ordered_json> out;
  for (int k = 0; k <= cfg.k_max; ++k) {
    for (int l = 0; l <= cfg.l_max; ++l) {
      if (!keep(k, l)) continue;
      for (const char* fam : families) {
        out.push_back({{"k", k}, {"l", l}, {"family", fam}});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Goal builders per lemma id (shared by run and suite_goals)
// ---------------------------------------------------------------------------

std::vector<ProofGoal> goals_easy_lemma_a(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  std::string fam = params.at("family");
  Formula top = Formula::top();
  Formula g = fam == "boxplus"           ? boxplus_iter(k, top)
              : fam == "boxminus"        ? boxminus_iter(k, top)
              : fam == "boxplus_bounded" ? boxplus_bounded(k, top)
                                         : boxminus_bounded(k, top);
  return {goal(fam + "^" + std::to_string(k) + " over true is valid", std::move(g), true)};
}

std::vector<ProofGoal> goals_easy_lemma_b(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  std::string fam = params.at("family");
  Formula g = fam == "boxplus" ? boxplus_iter(k, Formula::bot()) : boxminus_iter(k, Formula::bot());
  return {goal(fam + "^" + std::to_string(k) + " over false is invalid", std::move(g), false)};
}

std::vector<ProofGoal> goals_box_less_than(const SuiteConfig& cfg, const ordered_json& params) {
  int k = params.at("k");
  std::string fam = params.at("family");
  Formula phi = pool_member(cfg, params.at("phi"));
  bool plus = fam == "boxplus";
  Formula lhs = plus ? boxplus_bounded(k + 1, phi) : boxminus_bounded(k + 1, phi);
  Formula rhs = plus ? Formula::conj(phi, boxplus(boxplus_bounded(k, phi)))
                     : Formula::conj(phi, boxminus(boxminus_bounded(k, phi)));
  return {goal("bounded box unfolding step at k=" + std::to_string(k),
               Formula::iff(std::move(lhs), std::move(rhs)), true)};
}

std::vector<ProofGoal> goals_k_l_boxes(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  int l = params.at("l");
  std::string fam = params.at("family");
  Formula g = fam == "boxplus"
                  ? Formula::imp(boxplus_iter(k, Formula::bot()), boxplus_iter(l, Formula::bot()))
                  : Formula::imp(boxminus_iter(k, Formula::bot()), boxminus_iter(l, Formula::bot()));
  return {goal("level " + std::to_string(k) + " does not imply level " + std::to_string(l),
               std::move(g), false)};
}

std::vector<ProofGoal> goals_to_be_used_later(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  std::string fam = params.at("family");
  if (fam == "sigma") {
    Formula lhs = Formula::conj(boxplus_bounded(k, var_x()), boxplus_iter(k, Formula::bot()));
    return {goal("bounded-and-level premise implies sigma_" + std::to_string(k),
                 Formula::imp(std::move(lhs), sigma_subst(k).image(suite_variable())), true)};
  }
  Formula lhs = Formula::conj(boxminus_bounded(k, Formula::neg(var_x())),
                              boxminus_iter(k, Formula::bot()));
  return {goal("bounded-and-level premise implies ~tau_" + std::to_string(k),
               Formula::imp(std::move(lhs),
                            Formula::neg(tau_subst(k).image(suite_variable()))),
               true)};
}

std::vector<ProofGoal> goals_imply_x(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  std::string fam = params.at("family");
  if (fam == "sigma") {
    return {goal("sigma_" + std::to_string(k) + "(x) implies x",
                 Formula::imp(sigma_subst(k).image(suite_variable()), var_x()), true)};
  }
  return {goal("~tau_" + std::to_string(k) + "(x) implies ~x",
               Formula::imp(Formula::neg(tau_subst(k).image(suite_variable())),
                            Formula::neg(var_x())),
               true)};
}

std::vector<ProofGoal> goals_imply_box_x(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  std::string fam = params.at("family");
  if (fam == "sigma") {
    Formula img = sigma_subst(k).image(suite_variable());
    return {goal("sigma_" + std::to_string(k) + "(x) implies [+] of itself",
                 Formula::imp(img, boxplus(img)), true)};
  }
  Formula img = Formula::neg(tau_subst(k).image(suite_variable()));
  return {goal("~tau_" + std::to_string(k) + "(x) implies [-] of itself",
               Formula::imp(img, boxminus(img)), true)};
}

std::vector<ProofGoal> goals_imply_levels(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  int l = params.at("l");
  std::string fam = params.at("family");
  if (fam == "sigma") {
    return {goal("sigma_" + std::to_string(k) + "(x) implies level " + std::to_string(l),
                 Formula::imp(sigma_subst(k).image(suite_variable()),
                              boxplus_iter(l, Formula::bot())),
                 true)};
  }
  return {goal("~tau_" + std::to_string(k) + "(x) implies level " + std::to_string(l),
               Formula::imp(Formula::neg(tau_subst(k).image(suite_variable())),
                            boxminus_iter(l, Formula::bot())),
               true)};
}

std::vector<ProofGoal> goals_imply_levels_neg(const SuiteConfig&, const ordered_json& params) {
  std::string fam = params.at("family");
  if (fam == "sigma-trick" || fam == "tau-trick") {
    int k = params.at("k");
    if (fam == "sigma-trick") {
      Substitution to_top;
      to_top.set(suite_variable(), Formula::top());
      return {goal("level " + std::to_string(k) + " implies sigma_" + std::to_string(k) +
                       " under x := true",
                   Formula::imp(boxplus_iter(k, Formula::bot()),
                                to_top.apply(sigma_subst(k).image(suite_variable()))),
                   true)};
    }
    Substitution to_bot;
    to_bot.set(suite_variable(), Formula::bot());
    return {goal("level " + std::to_string(k) + " implies ~tau_" + std::to_string(k) +
                     " under x := false",
                 Formula::imp(boxminus_iter(k, Formula::bot()),
                              to_bot.apply(Formula::neg(tau_subst(k).image(suite_variable())))),
                 true)};
  }
  int k = params.at("k");
  int l = params.at("l");
  if (fam == "sigma") {
    return {goal("sigma_" + std::to_string(k) + "(x) does not imply level " + std::to_string(l),
                 Formula::imp(sigma_subst(k).image(suite_variable()),
                              boxplus_iter(l, Formula::bot())),
                 false)};
  }
  return {goal("~tau_" + std::to_string(k) + "(x) does not imply level " + std::to_string(l),
               Formula::imp(Formula::neg(tau_subst(k).image(suite_variable())),
                            boxminus_iter(l, Formula::bot())),
               false)};
}

std::vector<ProofGoal> goals_not_the_case(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  int l = params.at("l");
  std::string fam = params.at("family");
  if (fam == "tau") {
    return {goal("level-" + std::to_string(k) + " or ~tau_" + std::to_string(l) + " is invalid",
                 Formula::disj(boxplus_iter(k, Formula::bot()),
                               Formula::neg(tau_subst(l).image(suite_variable()))),
                 false)};
  }
  return {goal("level-" + std::to_string(k) + " or sigma_" + std::to_string(l) + " is invalid",
               Formula::disj(boxminus_iter(k, Formula::bot()),
                             sigma_subst(l).image(suite_variable())),
               false)};
}

std::vector<ProofGoal> goals_pre1(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  int l = params.at("l");
  std::string fam = params.at("family");
  if (fam == "sigma") {
    Formula lhs = Formula::conj(boxplus_iter(k, Formula::bot()),
                                sigma_subst(l).image(suite_variable()));
    return {goal("level-" + std::to_string(k) + " cut of sigma_" + std::to_string(l),
                 Formula::iff(std::move(lhs), sigma_subst(k).image(suite_variable())), true)};
  }
  Formula lhs = Formula::conj(boxminus_iter(k, Formula::bot()),
                              Formula::neg(tau_subst(l).image(suite_variable())));
  return {goal("level-" + std::to_string(k) + " cut of ~tau_" + std::to_string(l),
               Formula::iff(std::move(lhs),
                            Formula::neg(tau_subst(k).image(suite_variable()))),
               true)};
}

std::vector<ProofGoal> goals_pre2(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  int l = params.at("l");
  std::string fam = params.at("family");
  if (fam == "sigma") {
    Formula img = sigma_subst(k).image(suite_variable());
    return {goal("lambda_" + std::to_string(l) + " fixes sigma_" + std::to_string(k),
                 Formula::iff(lambda_subst(l).apply(img), img), true)};
  }
  Formula img = tau_subst(k).image(suite_variable());
  return {goal("mu_" + std::to_string(l) + " fixes tau_" + std::to_string(k),
               Formula::iff(mu_subst(l).apply(img), img), true)};
}

std::vector<ProofGoal> goals_pre3(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  int l = params.at("l");
  std::string fam = params.at("family");
  if (fam == "sigma") {
    return {goal("lambda_" + std::to_string(l) + " collapses sigma_" + std::to_string(k),
                 Formula::iff(lambda_subst(l).apply(sigma_subst(k).image(suite_variable())),
                              sigma_subst(l).image(suite_variable())),
                 true)};
  }
  return {goal("mu_" + std::to_string(l) + " collapses tau_" + std::to_string(k),
               Formula::iff(mu_subst(l).apply(tau_subst(k).image(suite_variable())),
                            tau_subst(l).image(suite_variable())),
               true)};
}

std::vector<ProofGoal> goals_compose(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  int l = params.at("l");
  std::string fam = params.at("family");
  if (fam == "sigma") {
    return {equiv_goal("sigma_" + std::to_string(l) + " o lambda_" + std::to_string(k) +
                           " ~ sigma_" + std::to_string(k),
                       compose(sigma_subst(l), lambda_subst(k)), sigma_subst(k), true)};
  }
  return {equiv_goal("tau_" + std::to_string(l) + " o mu_" + std::to_string(k) + " ~ tau_" +
                         std::to_string(k),
                     compose(tau_subst(l), mu_subst(k)), tau_subst(k), true)};
}

std::vector<ProofGoal> goals_0kq(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  int l = params.at("l");
  std::string fam = params.at("family");
  if (fam == "sigma") {
    return {witness_goal("lambda_" + std::to_string(k) + " witnesses sigma_" + std::to_string(l) +
                             " more general than sigma_" + std::to_string(k),
                         sigma_subst(l), sigma_subst(k), lambda_subst(k), true)};
  }
  return {witness_goal("mu_" + std::to_string(k) + " witnesses tau_" + std::to_string(l) +
                           " more general than tau_" + std::to_string(k),
                       tau_subst(l), tau_subst(k), mu_subst(k), true)};
}

std::vector<ProofGoal> goals_0kr(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  int l = params.at("l");
  std::string fam = params.at("family");
  std::vector<ProofGoal> out;
  if (fam == "sigma") {
    out.push_back(goal("core: sigma_" + std::to_string(l) + "(x) does not imply level " +
                           std::to_string(k),
                       Formula::imp(sigma_subst(l).image(suite_variable()),
                                    boxplus_iter(k, Formula::bot())),
                       false));
    out.push_back(witness_goal("lambda_" + std::to_string(l) + " fails as a witness",
                               sigma_subst(k), sigma_subst(l), lambda_subst(l), false));
    out.push_back(witness_goal("identity fails as a witness", sigma_subst(k), sigma_subst(l),
                               Substitution::identity(), false));
  } else {
    out.push_back(goal("core: ~tau_" + std::to_string(l) + "(x) does not imply level " +
                           std::to_string(k),
                       Formula::imp(Formula::neg(tau_subst(l).image(suite_variable())),
                                    boxminus_iter(k, Formula::bot())),
                       false));
    out.push_back(witness_goal("mu_" + std::to_string(l) + " fails as a witness", tau_subst(k),
                               tau_subst(l), mu_subst(l), false));
    out.push_back(witness_goal("identity fails as a witness", tau_subst(k), tau_subst(l),
                               Substitution::identity(), false));
  }
  return out;
}

std::vector<ProofGoal> goals_0kqr(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  int l = params.at("l");
  std::string fam = params.at("family");
  std::vector<ProofGoal> out;
  if (fam == "sigma-tau") {
    out.push_back(goal("core: level-" + std::to_string(k) + " or ~tau_" + std::to_string(l),
                       Formula::disj(boxplus_iter(k, Formula::bot()),
                                     Formula::neg(tau_subst(l).image(suite_variable()))),
                       false));
    out.push_back(witness_goal("identity never maps sigma_" + std::to_string(k) + " onto tau_" +
                                   std::to_string(l),
                               sigma_subst(k), tau_subst(l), Substitution::identity(), false));
  } else {
    out.push_back(goal("core: level-" + std::to_string(k) + " or sigma_" + std::to_string(l),
                       Formula::disj(boxminus_iter(k, Formula::bot()),
                                     sigma_subst(l).image(suite_variable())),
                       false));
    out.push_back(witness_goal("identity never maps tau_" + std::to_string(k) + " onto sigma_" +
                                   std::to_string(l),
                               tau_subst(k), sigma_subst(l), Substitution::identity(), false));
  }
  return out;
}

std::vector<ProofGoal> goals_every_unifier(const SuiteConfig& cfg, const ordered_json& params) {
  int k = params.at("k");
  Substitution u = unifier_member(cfg, params.at("unifier"));
  Formula img = u.image(suite_variable());
  std::string name = params.at("unifier");
  return {goal(name + "(x) implies its bounded [+] closure at " + std::to_string(k),
               Formula::imp(img, boxplus_bounded(k, img)), true),
          goal("~" + name + "(x) implies its bounded [-] closure at " + std::to_string(k),
               Formula::imp(Formula::neg(img), boxminus_bounded(k, Formula::neg(img))), true)};
}

std::vector<ProofGoal> goals_0k(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  std::string fam = params.at("family");
  Substitution u = fam == "sigma" ? sigma_subst(k) : tau_subst(k);
  return {goal(fam + "_" + std::to_string(k) + " unifies the suite formula",
               u.apply(nullary_formula()), true)};
}

std::vector<ProofGoal> goals_4k(const SuiteConfig&, const ordered_json& params) {
  int k = params.at("k");
  int l = params.at("l");
  std::string fam = params.at("family");
  bool expect = l <= k;  // the level substitution reaches exactly the levels below it
  std::vector<ProofGoal> out;
  if (fam == "sigma") {
    out.push_back(equiv_goal("(a) sigma_" + std::to_string(k) + " o sigma_" + std::to_string(l) +
                                 " ~ sigma_" + std::to_string(l),
                             compose(sigma_subst(k), sigma_subst(l)), sigma_subst(l), expect));
    out.push_back(goal("(c) sigma_" + std::to_string(l) + "(x) implies level " + std::to_string(k),
                       Formula::imp(sigma_subst(l).image(suite_variable()),
                                    boxplus_iter(k, Formula::bot())),
                       expect));
  } else {
    out.push_back(equiv_goal("(d) tau_" + std::to_string(k) + " o tau_" + std::to_string(l) +
                                 " ~ tau_" + std::to_string(l),
                             compose(tau_subst(k), tau_subst(l)), tau_subst(l), expect));
    out.push_back(goal("(f) ~tau_" + std::to_string(l) + "(x) implies level " + std::to_string(k),
                       Formula::imp(Formula::neg(tau_subst(l).image(suite_variable())),
                                    boxminus_iter(k, Formula::bot())),
                       expect));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extra (non-goal) check bodies
// ---------------------------------------------------------------------------

void run_degrees(const SuiteConfig& cfg, const ordered_json& params, LemmaCheck& out) {
  int samples = params.at("samples");
  int k_upto = params.at("k_upto");
  Rng rng = make_rng(cfg, out.id, params);
  std::vector<Atom> atoms = {Atom::variable("x"), Atom::variable("y"), param_p(), param_q()};
  int violations = 0;
  for (int i = 0; i < samples; ++i) {
    Formula f = random_formula(rng, 4, atoms);
    int d = f.degree();
    if (boxplus(f).degree() != d + 3) ++violations;
    if (boxminus(f).degree() != d + 3) ++violations;
    for (int k = 0; k <= k_upto; ++k) {
      if (boxplus_iter(k, f).degree() != d + 3 * k) ++violations;
      if (boxminus_iter(k, f).degree() != d + 3 * k) ++violations;
      int expect_bounded = k == 0 ? 0 : d + 3 * (k - 1);
      if (boxplus_bounded(k, f).degree() != expect_bounded) ++violations;
      if (boxminus_bounded(k, f).degree() != expect_bounded) ++violations;
    }
  }
  check_bool("degree identities hold on random formulas", violations == 0, out,
             {{"samples", samples}, {"k_upto", k_upto}, {"violations", violations}});
}

void run_chain_replay(const SuiteConfig& cfg, const ordered_json& params, LemmaCheck& out) {
  int k = params.at("k");
  std::string fam = params.at("family");
  Model m = chain_model(k);
  check_bool("chain frame is symmetric", is_symmetric(m.frame), out);
  check_bool("chain frame is reflexive", is_reflexive(m.frame), out);
  if (fam == "boxplus") {
    check_bool("chain falsifies the level formula at state 0",
               !satisfies(m, 0, boxplus_iter(k, Formula::bot())), out);
  } else {
    check_bool("chain falsifies the level formula at state 3k",
               !satisfies(m, 3 * k, boxminus_iter(k, Formula::bot())), out);
  }
  (void)cfg;
}

void run_k_l_replay(const SuiteConfig& cfg, const ordered_json& params, LemmaCheck& out) {
  int k = params.at("k");
  int l = params.at("l");
  std::string fam = params.at("family");
  Model m = chain_model(l);
  if (fam == "boxplus") {
    Formula g = Formula::imp(boxplus_iter(k, Formula::bot()), boxplus_iter(l, Formula::bot()));
    check_bool("chain over the smaller level falsifies the implication at 0",
               !satisfies(m, 0, g), out);
  } else {
    Formula g = Formula::imp(boxminus_iter(k, Formula::bot()), boxminus_iter(l, Formula::bot()));
    check_bool("chain over the smaller level falsifies the implication at 3l",
               !satisfies(m, 3 * l, g), out);
  }
  (void)cfg;
}

void run_tense(const SuiteConfig& cfg, const ordered_json& params, LemmaCheck& out) {
  Formula phi = pool_member(cfg, params.at("phi"));
  Verdict a = decide(cfg.logic, Formula::imp(phi, boxplus(phi)), cfg.prover);
  Verdict b = decide(cfg.logic, Formula::imp(Formula::neg(phi), boxminus(Formula::neg(phi))),
                     cfg.prover);
  ordered_json ev;
  ev["claim"] = "the [+] persistence of phi and the [-] persistence of ~phi agree";
  ev["got_plus"] = to_string(a.kind());
  ev["got_minus"] = to_string(b.kind());
  CheckStatus st;
  if (a.is_unknown() || b.is_unknown()) {
    st = CheckStatus::Indeterminate;
  } else {
    st = (a.is_valid() == b.is_valid()) ? CheckStatus::Pass : CheckStatus::Fail;
  }
  out.status = combine(out.status, st);
  out.evidence.push_back(std::move(ev));
}

void run_simeq_props(const SuiteConfig& cfg, const ordered_json& params, LemmaCheck& out) {
  int samples = params.at("samples");
  Rng rng = make_rng(cfg, out.id, params);
  std::vector<Atom> vars = {Atom::variable("x"), Atom::variable("y")};
  std::vector<Atom> atoms = {Atom::variable("x"), Atom::variable("y"), param_p()};
  std::vector<Substitution> pool = {Substitution::identity(), sigma_subst(0), sigma_subst(1),
                                    tau_subst(0), tau_subst(1), lambda_subst(1), mu_subst(1)};
  for (int i = 0; i < samples; ++i) {
    Substitution s = pool[rng.below(pool.size())];
    Substitution t = rng.coin() ? pool[rng.below(pool.size())]
                                : random_substitution(rng, vars, atoms, 2);
    check_ternary("~ is reflexive on a sample", equivalent(cfg.logic, s, s, cfg.prover), true,
                  out);
    Ternary st_ = equivalent(cfg.logic, s, t, cfg.prover);
    Ternary ts = equivalent(cfg.logic, t, s, cfg.prover);
    check_bool("~ is symmetric on a sample",
               st_ == ts || st_ == Ternary::Unknown || ts == Ternary::Unknown, out);
    check_ternary("identity witnesses reflexivity of the generality preorder",
                  more_general_with_witness(cfg.logic, s, s, Substitution::identity(),
                                            cfg.prover),
                  true, out);
    // Constructive transitivity: with t2 = s o w1 and t3 = t2 o w2, the
    // composite witness w1 o w2 takes s onto t3.
    Substitution w1 = random_substitution(rng, vars, atoms, 2);
    Substitution w2 = random_substitution(rng, vars, atoms, 2);
    Substitution t2 = compose(s, w1);
    Substitution t3 = compose(t2, w2);
    check_ternary("composed witnesses chain the generality preorder",
                  more_general_with_witness(cfg.logic, s, t3, compose(w1, w2), cfg.prover), true,
                  out);
  }
  // Transitivity of ~ on a fixed semantic triple: sigma_l o lambda_k ~ sigma_k
  // and the level-cut biconditionals make these three pairwise equivalent.
  Substitution a = compose(sigma_subst(1), lambda_subst(0));
  Substitution b = sigma_subst(0);
  Substitution c = compose(sigma_subst(2), lambda_subst(0));
  Ternary ab = equivalent(cfg.logic, a, b, cfg.prover);
  Ternary bc = equivalent(cfg.logic, b, c, cfg.prover);
  Ternary ac = equivalent(cfg.logic, a, c, cfg.prover);
  if (ab == Ternary::True && bc == Ternary::True) {
    check_ternary("~ is transitive on the composed level substitutions", ac, true, out);
  }
}

void run_normal_unifiers(const SuiteConfig& cfg, const ordered_json& params, LemmaCheck& out) {
  int samples = params.at("samples");
  Rng rng = make_rng(cfg, out.id, params);
  std::vector<Atom> atoms = {Atom::variable("x"), param_p(), param_q()};
  Formula phi = nullary_formula();
  auto pool = unifier_pool(cfg);
  for (int i = 0; i < samples; ++i) {
    auto& [name, base] = pool[rng.below(pool.size())];
    Substitution padded = base;
    padded.set(Atom::variable("y"), random_formula(rng, 2, atoms));
    Substitution trimmed = restrict_to(padded, phi);
    bool support_ok = true;
    for (const auto& [v, img] : trimmed.support()) {
      if (!phi.variables().contains(v)) support_ok = false;
    }
    check_bool("restriction keeps only variables of the formula (" + name + ")", support_ok, out);
    check_ternary("the padded substitution still unifies (" + name + ")",
                  is_unifier(cfg.logic, padded, phi, cfg.prover), true, out);
    check_ternary("the restriction still unifies (" + name + ")",
                  is_unifier(cfg.logic, trimmed, phi, cfg.prover), true, out);
    // For these instances the discarded entries themselves witness that the
    // restriction is at least as general as the padded unifier.
    Substitution witness;
    witness.set(Atom::variable("y"), padded.image(Atom::variable("y")));
    check_ternary("discarded entries witness generality of the restriction (" + name + ")",
                  more_general_with_witness(cfg.logic, trimmed, padded, witness, cfg.prover),
                  true, out);
  }
}

void run_witness_paths(const SuiteConfig& cfg, const ordered_json& params, LemmaCheck& out) {
  int k = params.at("k");
  Model m = chain_model(k);
  WitnessPath plus = extract_witness_path(m, 0, k, Polarity::Plus);
  WitnessPath minus = extract_witness_path(m, 3 * k, k, Polarity::Minus);
  std::vector<State> expect_plus, expect_minus;
  for (State s = 0; s <= 3 * k; ++s) expect_plus.push_back(s);
  for (State s = 3 * k; s >= 0; --s) expect_minus.push_back(s);
  check_bool("plus witness path walks up the chain", plus.states == expect_plus, out,
             {{"path", plus.states}});
  check_bool("minus witness path walks down the chain", minus.states == expect_minus, out,
             {{"path", minus.states}});
  // Label pattern validation through the model checker.
  bool labels_ok = true;
  for (int i = 0; i < static_cast<int>(plus.states.size()); ++i) {
    bool p = satisfies(m, plus.states[i], Formula::atom(param_p()));
    bool q = satisfies(m, plus.states[i], Formula::atom(param_q()));
    switch (i % 3) {
      case 0: labels_ok &= !p && !q; break;
      case 1: labels_ok &= p && !q; break;
      case 2: labels_ok &= !p && q; break;
    }
  }
  check_bool("plus witness path labels follow the guard pattern", labels_ok, out);
  (void)cfg;
}

void run_bridge_locality(const SuiteConfig& cfg, const ordered_json& params, LemmaCheck& out) {
  int samples = params.at("samples");
  int k = params.at("k");
  UnravelMode mode =
      params.at("mode") == "reflexive" ? UnravelMode::Reflexive : UnravelMode::Plain;
  Rng rng = make_rng(cfg, out.id, params);
  std::vector<Atom> atoms = {Atom::variable("x"), param_p(), param_q()};
  int mismatches = 0;
  for (int i = 0; i < samples; ++i) {
    Model left = noised_chain(rng, k, mode == UnravelMode::Reflexive);
    Model right = noised_chain(rng, k, mode == UnravelMode::Reflexive);
    Bridge b = bridge_model({left, 0}, {right, 3 * k}, k, mode);
    Formula psi = random_bounded(rng, 3, 3 * k, atoms);
    if (satisfies(b.model, b.left_root, psi) != satisfies(left, 0, psi)) ++mismatches;
    if (satisfies(b.model, b.right_root, psi) != satisfies(right, 3 * k, psi)) ++mismatches;
  }
  check_bool("bridge roots agree with the original points on low-degree formulas",
             mismatches == 0, out, {{"samples", samples}, {"mismatches", mismatches}});
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

using GoalFn = std::function<std::vector<ProofGoal>(const SuiteConfig&, const ordered_json&)>;
using ExtraFn = std::function<void(const SuiteConfig&, const ordered_json&, LemmaCheck&)>;

RegistryEntry make_entry(std::string id, std::string summary, std::string scope,
                         std::function<std::vector<ordered_json>(const SuiteConfig&)> instances,
                         GoalFn goals, ExtraFn extra = nullptr) {
  RegistryEntry e;
  e.id = id;
  e.summary = std::move(summary);
  e.scope = std::move(scope);
  e.instances = std::move(instances);
  e.run = [id, goals, extra](const SuiteConfig& cfg, const ordered_json& params) {
    LemmaCheck check = fresh_check(id, params);
    if (goals) {
      for (const ProofGoal& g : goals(cfg, params)) check_goal(cfg, g, check);
    }
    if (extra) extra(cfg, params, check);
    return check;
  };
  return e;
}

std::vector<ordered_json> phi_pool_instances(const SuiteConfig& cfg) {
  std::vector<ordered_json> out;
  for (auto& [name, f] : phi_pool(cfg)) out.push_back({{"phi", name}});
  return out;
}

std::vector<RegistryEntry> build_registry() {
  std::vector<RegistryEntry> reg;

  reg.push_back(make_entry(
      "degrees", "degree arithmetic of the guarded connectives", "checked",
      [](const SuiteConfig&) {
        return std::vector<ordered_json>{{{"samples", 100}, {"k_upto", 5}}};
      },
      nullptr, run_degrees));

  reg.push_back(make_entry(
      "easy:lemma:a", "guarded boxes over true are valid", "checked",
      [](const SuiteConfig& cfg) {
        return k_instances(cfg, {"boxplus", "boxminus", "boxplus_bounded", "boxminus_bounded"});
      },
      goals_easy_lemma_a));

  reg.push_back(make_entry(
      "easy:lemma:b", "guarded boxes over false fail, with chain countermodels", "checked",
      [](const SuiteConfig& cfg) { return k_instances(cfg, {"boxplus", "boxminus"}); },
      goals_easy_lemma_b, run_chain_replay));

  reg.push_back(make_entry(
      "lemma:about:box:less:than", "bounded boxes unfold one level at a time",
      "instance evidence, not proof",
      [](const SuiteConfig& cfg) {
        std::vector<ordered_json> out;
        for (int k = 0; k <= cfg.k_max; ++k) {
          for (auto& [name, f] : phi_pool(cfg)) {
            for (const char* fam : {"boxplus", "boxminus"}) {
              out.push_back({{"k", k}, {"phi", name}, {"family", fam}});
            }
          }
        }
        return out;
      },
      goals_box_less_than));

  reg.push_back(make_entry(
      "lemma:about:k:l:and:boxes", "higher levels never imply lower levels", "checked",
      [](const SuiteConfig& cfg) {
        return pair_instances(cfg, {"boxplus", "boxminus"},
                              [](int k, int l) { return k > l; });
      },
      goals_k_l_boxes, run_k_l_replay));

  reg.push_back(make_entry(
      "proposition:tense:modalities",
      "[+] persistence of phi matches [-] persistence of ~phi",
      "instance evidence, not proof", phi_pool_instances, nullptr, run_tense));

  reg.push_back(make_entry(
      "lemma:simeq:ref:sym:tra",
      "substitution equivalence is an equivalence; generality is a preorder",
      "instance evidence, not proof",
      [](const SuiteConfig&) {
        return std::vector<ordered_json>{{{"samples", 4}}};
      },
      nullptr, run_simeq_props));

  reg.push_back(make_entry(
      "normal:unifiers:are:enough",
      "restricting a unifier to the formula's variables keeps it a unifier",
      "instance evidence, not proof",
      [](const SuiteConfig&) {
        return std::vector<ordered_json>{{{"samples", 4}}};
      },
      nullptr, run_normal_unifiers));

  reg.push_back(make_entry(
      "lemma:to:be:used:later", "bounded-and-level premises rebuild the level substitutions",
      "checked", [](const SuiteConfig& cfg) { return k_instances(cfg, {"sigma", "tau"}); },
      goals_to_be_used_later));

  reg.push_back(make_entry(
      "lemma:sigma:tau:imply:x", "level substitutions decide the suite variable", "checked",
      [](const SuiteConfig& cfg) { return k_instances(cfg, {"sigma", "tau"}); },
      goals_imply_x));

  reg.push_back(make_entry(
      "lemma:sigma:tau:imply:box:x", "level substitutions persist through their guarded box",
      "checked", [](const SuiteConfig& cfg) { return k_instances(cfg, {"sigma", "tau"}); },
      goals_imply_box_x));

  reg.push_back(make_entry(
      "lemma:sigma:tau:imply:box:bot:bot", "level k implies every level at or above k",
      "checked",
      [](const SuiteConfig& cfg) {
        return pair_instances(cfg, {"sigma", "tau"}, [](int k, int l) { return k <= l; });
      },
      goals_imply_levels));

  reg.push_back(make_entry(
      "lemma:sigma:tau:imply:box:bot:bot:k:greater:than:l",
      "level k never implies a level strictly below k", "checked",
      [](const SuiteConfig& cfg) {
        std::vector<ordered_json> out =
            pair_instances(cfg, {"sigma", "tau"}, [](int k, int l) { return k > l; });
        for (int k = 0; k <= cfg.k_max; ++k) {
          out.push_back({{"k", k}, {"family", "sigma-trick"}});
          out.push_back({{"k", k}, {"family", "tau-trick"}});
        }
        return out;
      },
      goals_imply_levels_neg));

  reg.push_back(make_entry(
      "lemma:sigma:tau:imply:not:the:case:this:time",
      "no level formula covers the opposite family", "checked",
      [](const SuiteConfig& cfg) {
        return pair_instances(cfg, {"tau", "sigma"}, [](int, int) { return true; });
      },
      goals_not_the_case));

  reg.push_back(make_entry(
      "lemma:sigma:lambda:k:l:and:also:tau:mu:k:l:pre:1",
      "cutting a higher level substitution down to level k", "checked",
      [](const SuiteConfig& cfg) {
        return pair_instances(cfg, {"sigma", "tau"}, [](int k, int l) { return k <= l; });
      },
      goals_pre1));

  reg.push_back(make_entry(
      "lemma:sigma:lambda:k:l:and:also:tau:mu:k:l:pre:2",
      "the closed-form substitutions fix lower-level images", "checked",
      [](const SuiteConfig& cfg) {
        return pair_instances(cfg, {"sigma", "tau"}, [](int k, int l) { return k <= l; });
      },
      goals_pre2));

  reg.push_back(make_entry(
      "lemma:sigma:lambda:k:l:and:also:tau:mu:k:l:pre:3",
      "the closed-form substitutions collapse higher-level images", "checked",
      [](const SuiteConfig& cfg) {
        return pair_instances(cfg, {"sigma", "tau"}, [](int k, int l) { return k >= l; });
      },
      goals_pre3));

  reg.push_back(make_entry(
      "lemma:sigma:lambda:k:l:and:also:tau:mu:k:l",
      "composition with the closed forms steps levels down", "checked",
      [](const SuiteConfig& cfg) {
        return pair_instances(cfg, {"sigma", "tau"}, [](int k, int l) { return k <= l; });
      },
      goals_compose));

  reg.push_back(make_entry(
      "lemma:0:K:q", "higher levels are more general, with explicit witnesses", "checked",
      [](const SuiteConfig& cfg) {
        return pair_instances(cfg, {"sigma", "tau"}, [](int k, int l) { return k <= l; });
      },
      goals_0kq));

  reg.push_back(make_entry(
      "lemma:0:K:r", "lower levels are not more general than higher ones",
      "instance evidence, not proof",
      [](const SuiteConfig& cfg) {
        return pair_instances(cfg, {"sigma", "tau"}, [](int k, int l) { return k < l; });
      },
      goals_0kr));

  reg.push_back(make_entry(
      "lemma:0:K:qr", "the two families are generality-incomparable",
      "instance evidence, not proof",
      [](const SuiteConfig& cfg) {
        return pair_instances(cfg, {"sigma-tau", "tau-sigma"}, [](int, int) { return true; });
      },
      goals_0kqr));

  reg.push_back(make_entry(
      "lemma:every:unifier:of:varphi:has:this:property:1",
      "suite unifiers persist through bounded boxes", "instance evidence, not proof",
      [](const SuiteConfig& cfg) {
        std::vector<ordered_json> out;
        for (auto& [name, s] : unifier_pool(cfg)) {
          for (int k = 0; k <= cfg.k_max; ++k) {
            out.push_back({{"unifier", name}, {"k", k}});
          }
        }
        return out;
      },
      goals_every_unifier));

  reg.push_back(make_entry(
      "lemma:0:K", "every level substitution unifies the suite formula", "checked",
      [](const SuiteConfig& cfg) { return k_instances(cfg, {"sigma", "tau"}); }, goals_0k));

  reg.push_back(make_entry(
      "lemma:4:K", "absorption, generality and the level test coincide",
      "instance evidence, not proof",
      [](const SuiteConfig& cfg) {
        return pair_instances(cfg, {"sigma", "tau"}, [](int, int) { return true; });
      },
      goals_4k));

  reg.push_back(make_entry(
      "lemma:6:K",
      "witness paths and bridge locality (the constructive content; the "
      "universally quantified contradiction argument is a meta-theorem)",
      "instance evidence, not proof",
      [](const SuiteConfig& cfg) {
        std::vector<ordered_json> out;
        for (int k = 0; k <= std::min(cfg.k_max, 2); ++k) {
          out.push_back({{"part", "witness-paths"}, {"k", k}});
        }
        for (int k = 0; k <= std::min(cfg.k_max, 1); ++k) {
          out.push_back({{"part", "bridge"}, {"k", k}, {"mode", "plain"}, {"samples", 5}});
          out.push_back({{"part", "bridge"}, {"k", k}, {"mode", "reflexive"}, {"samples", 5}});
        }
        return out;
      },
      nullptr,
      [](const SuiteConfig& cfg, const ordered_json& params, LemmaCheck& out) {
        if (params.at("part") == "witness-paths") {
          run_witness_paths(cfg, params, out);
        } else {
          run_bridge_locality(cfg, params, out);
        }
      }));

  {
    RegistryEntry meta;
    meta.id = "lemma:7:K";
    meta.summary = "nullariness of the suite formula";
    meta.scope = "out of scope: meta-theorem";
    reg.push_back(std::move(meta));
  }

  return reg;
}

const GoalFn* goal_fn_for(const std::string& id) {
  static const std::unordered_map<std::string, GoalFn> table = {
      {"easy:lemma:a", goals_easy_lemma_a},
      {"easy:lemma:b", goals_easy_lemma_b},
      {"lemma:about:box:less:than", goals_box_less_than},
      {"lemma:about:k:l:and:boxes", goals_k_l_boxes},
      {"lemma:to:be:used:later", goals_to_be_used_later},
      {"lemma:sigma:tau:imply:x", goals_imply_x},
      {"lemma:sigma:tau:imply:box:x", goals_imply_box_x},
      {"lemma:sigma:tau:imply:box:bot:bot", goals_imply_levels},
      {"lemma:sigma:tau:imply:box:bot:bot:k:greater:than:l", goals_imply_levels_neg},
      {"lemma:sigma:tau:imply:not:the:case:this:time", goals_not_the_case},
      {"lemma:sigma:lambda:k:l:and:also:tau:mu:k:l:pre:1", goals_pre1},
      {"lemma:sigma:lambda:k:l:and:also:tau:mu:k:l:pre:2", goals_pre2},
      {"lemma:sigma:lambda:k:l:and:also:tau:mu:k:l:pre:3", goals_pre3},
      {"lemma:sigma:lambda:k:l:and:also:tau:mu:k:l", goals_compose},
      {"lemma:0:K:q", goals_0kq},
      {"lemma:0:K:r", goals_0kr},
      {"lemma:0:K:qr", goals_0kqr},
      {"lemma:every:unifier:of:varphi:has:this:property:1", goals_every_unifier},
      {"lemma:0:K", goals_0k},
      {"lemma:4:K", goals_4k},
  };
  auto it = table.find(id);
  return it == table.end() ? nullptr : &it->second;
}

}  // namespace

const std::vector<RegistryEntry>& lemma_registry() {
  static const std::vector<RegistryEntry> reg = build_registry();
  return reg;
}

const RegistryEntry& registry_entry(const std::string& id) {
  for (const RegistryEntry& e : lemma_registry()) {
    if (e.id == id) return e;
  }
  throw std::invalid_argument("unknown lemma id '" + id + "'");
}

LemmaCheck verify_lemma(const std::string& id, const SuiteConfig& config,
                        const nlohmann::ordered_json& params) {
  const RegistryEntry& e = registry_entry(id);
  if (!e.run) {
    throw std::invalid_argument("lemma '" + id + "' is " + e.scope + " and is not executable");
  }
  return e.run(config, params);
}

LemmaReport run_suite(const SuiteConfig& config) {
  LemmaReport report;
  report.config = config;
  for (const RegistryEntry& e : lemma_registry()) {
    if (!e.run) continue;
    for (const ordered_json& params : e.instances(config)) {
      report.checks.push_back(e.run(config, params));
    }
  }
  return report;
}

std::vector<SuiteGoal> suite_goals(const SuiteConfig& config) {
  std::vector<SuiteGoal> out;
  for (const RegistryEntry& e : lemma_registry()) {
    if (!e.run) continue;
    const GoalFn* fn = goal_fn_for(e.id);
    if (!fn) continue;
    for (const ordered_json& params : e.instances(config)) {
      for (const ProofGoal& g : (*fn)(config, params)) {
        out.push_back({e.id, g.note, g.goal, g.expect_valid});
      }
    }
  }
  return out;
}

}  // namespace modal
