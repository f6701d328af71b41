// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.  argv[1] is the path to the modalkit binary (used to check
// the `lemmas run` exit codes).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "modal/constructions.hpp"
#include "modal/harness.hpp"
#include "modal/prover.hpp"
#include "modal/sampling.hpp"
#include "modal/substitution.hpp"

using namespace modal;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string label)
      : number_(number), label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& what) {
    if (!ok) {
      problems_.push_back(what);
    }
  }

  void finish(double budget_seconds = 0.0) {
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                         .count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
      problems_.push_back("exceeded the time budget of " + std::to_string(budget_seconds) +
                          " s (took " + std::to_string(elapsed) + " s)");
    }
    if (problems_.empty()) {
      std::printf("PASS criterion %d: %s (%.2f s)\n", number_, label_.c_str(), elapsed);
    } else {
      ++failures;
      std::printf("FAIL criterion %d: %s (%.2f s)\n", number_, label_.c_str(), elapsed);
      for (const std::string& p : problems_) {
        std::printf("      - %s\n", p.c_str());
      }
    }
    std::fflush(stdout);
  }

 private:
  int number_;
  std::string label_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> problems_;
};

Formula x() { return Formula::atom(suite_variable()); }

bool expect_verdict(Criterion& c, Logic l, const Formula& f, bool expect_valid,
                    const std::string& what) {
  Verdict v = decide(l, f);
  if (v.is_unknown()) {
    c.require(false, what + ": unknown (" + v.reason() + ")");
    return false;
  }
  bool ok = v.is_valid() == expect_valid;
  c.require(ok, what + ": expected " + (expect_valid ? "valid" : "invalid") + ", got " +
                    std::string(to_string(v.kind())) + " for " + print(f));
  return ok;
}

// Re-checks an Invalid verdict from the outside: frame class plus failure of
// the formula at the point.
void expect_certified_invalid(Criterion& c, Logic l, const Formula& f, const std::string& what) {
  Verdict v = decide(l, f);
  if (!v.is_invalid()) {
    c.require(false, what + ": expected invalid, got " + std::string(to_string(v.kind())) +
                         " for " + print(f));
    return;
  }
  const PointedModel& pm = v.countermodel();
  c.require(frame_in_class(l, pm.model.frame), what + ": countermodel leaves the frame class");
  c.require(!satisfies(pm.model, pm.point, f), what + ": countermodel fails to falsify");
}

void criterion_1_degrees() {
  Criterion c(1, "degree arithmetic across the connective family");
  Rng rng(1001);
  std::vector<Atom> atoms = {Atom::variable("x"), Atom::variable("y"), param_p(), param_q()};
  for (int i = 0; i < 100; ++i) {
    Formula f = random_formula(rng, 4, atoms);
    int d = f.degree();
    c.require(boxplus(f).degree() == d + 3, "plus step at sample " + std::to_string(i));
    c.require(boxminus(f).degree() == d + 3, "minus step at sample " + std::to_string(i));
    for (int k = 0; k <= 5; ++k) {
      c.require(boxplus_iter(k, f).degree() == d + 3 * k, "plus iteration");
      c.require(boxminus_iter(k, f).degree() == d + 3 * k, "minus iteration");
      int bounded = k == 0 ? 0 : d + 3 * (k - 1);
      c.require(boxplus_bounded(k, f).degree() == bounded, "plus bound");
      c.require(boxminus_bounded(k, f).degree() == bounded, "minus bound");
    }
  }
  c.finish(1.0);
}

void criterion_2_chains() {
  Criterion c(2, "chain countermodels falsify the level formulas");
  for (int k = 0; k <= 3; ++k) {
    Model m = chain_model(k);
    c.require(is_symmetric(m.frame), "chain " + std::to_string(k) + " symmetric");
    c.require(is_reflexive(m.frame), "chain " + std::to_string(k) + " reflexive");
    c.require(!satisfies(m, 0, boxplus_iter(k, Formula::bot())),
              "chain " + std::to_string(k) + " falsifies the plus level at 0");
    c.require(!satisfies(m, 3 * k, boxminus_iter(k, Formula::bot())),
              "chain " + std::to_string(k) + " falsifies the minus level at 3k");
  }
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; l < k; ++l) {
      Model m = chain_model(l);
      c.require(!satisfies(m, 0,
                           Formula::imp(boxplus_iter(k, Formula::bot()),
                                        boxplus_iter(l, Formula::bot()))),
                "chain separation " + std::to_string(k) + ">" + std::to_string(l));
      c.require(!satisfies(m, 3 * l,
                           Formula::imp(boxminus_iter(k, Formula::bot()),
                                        boxminus_iter(l, Formula::bot()))),
                "chain separation (minus) " + std::to_string(k) + ">" + std::to_string(l));
    }
  }
  c.finish(1.0);
}

void criterion_3_positives() {
  Criterion c(3, "prover positives");
  const std::vector<Logic> logics = {Logic::KB, Logic::KDB, Logic::KTB};
  for (Logic l : logics) {
    for (int k = 0; k <= 3; ++k) {
      expect_verdict(c, l, boxplus_iter(k, Formula::top()), true, "plus tower");
      expect_verdict(c, l, boxminus_iter(k, Formula::top()), true, "minus tower");
      expect_verdict(c, l, boxplus_bounded(k, Formula::top()), true, "plus bounded tower");
      expect_verdict(c, l, boxminus_bounded(k, Formula::top()), true, "minus bounded tower");
    }
    expect_verdict(c, l, parse("~#p -> [] ~ [] #p"), true, "symmetry axiom");
  }
  expect_verdict(c, Logic::KTB, parse("[] #p -> #p"), true, "reflexivity axiom in ktb");
  expect_verdict(c, Logic::KB, parse("[] #p -> #p"), false, "reflexivity axiom outside ktb");

  // Positive halves of the level-substitution lemmas, k,l <= 2.
  SuiteConfig cfg;
  cfg.logic = Logic::KB;
  const std::set<std::string> positive_ids = {
      "lemma:to:be:used:later",
      "lemma:sigma:tau:imply:x",
      "lemma:sigma:tau:imply:box:x",
      "lemma:sigma:tau:imply:box:bot:bot",
      "lemma:sigma:tau:imply:box:bot:bot:k:greater:than:l",
      "lemma:sigma:lambda:k:l:and:also:tau:mu:k:l:pre:1",
      "lemma:sigma:lambda:k:l:and:also:tau:mu:k:l:pre:2",
      "lemma:sigma:lambda:k:l:and:also:tau:mu:k:l:pre:3",
      "lemma:sigma:lambda:k:l:and:also:tau:mu:k:l",
      "lemma:0:K:q",
  };
  int positives = 0;
  for (const SuiteGoal& g : suite_goals(cfg)) {
    if (!positive_ids.contains(g.id) || !g.expect_valid) continue;
    expect_verdict(c, Logic::KB, g.goal, true, g.id + " / " + g.note);
    ++positives;
  }
  c.require(positives >= 80, "expected at least 80 positive goals, saw " +
                                 std::to_string(positives));
  c.finish(600.0);
}

void criterion_4_negatives() {
  Criterion c(4, "prover negatives carry certified countermodels");
  for (int k = 0; k <= 2; ++k) {
    expect_certified_invalid(c, Logic::KB, boxplus_iter(k, Formula::bot()), "plus level");
    expect_certified_invalid(c, Logic::KB, boxminus_iter(k, Formula::bot()), "minus level");
  }
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; l < k; ++l) {
      expect_certified_invalid(c, Logic::KB,
                               Formula::imp(boxplus_iter(k, Formula::bot()),
                                            boxplus_iter(l, Formula::bot())),
                               "level separation");
      expect_certified_invalid(c, Logic::KB,
                               Formula::imp(sigma_subst(k).image(suite_variable()),
                                            boxplus_iter(l, Formula::bot())),
                               "sigma level separation");
      expect_certified_invalid(c, Logic::KB,
                               Formula::imp(Formula::neg(tau_subst(k).image(suite_variable())),
                                            boxminus_iter(l, Formula::bot())),
                               "tau level separation");
    }
  }
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; l <= 2; ++l) {
      expect_certified_invalid(
          c, Logic::KB,
          Formula::disj(boxplus_iter(k, Formula::bot()),
                        Formula::neg(tau_subst(l).image(suite_variable()))),
          "family-crossing disjunction");
      expect_certified_invalid(c, Logic::KB,
                               Formula::disj(boxminus_iter(k, Formula::bot()),
                                             sigma_subst(l).image(suite_variable())),
                               "family-crossing disjunction (minus)");
    }
  }
  c.finish(600.0);
}

void criterion_5_unification() {
  Criterion c(5, "unification layer");
  Formula phi = nullary_formula();
  for (Logic l : {Logic::KB, Logic::KDB, Logic::KTB}) {
    for (int k = 0; k <= 2; ++k) {
      c.require(is_unifier(l, sigma_subst(k), phi) == Ternary::True,
                "sigma_" + std::to_string(k) + " unifies in " + std::string(to_string(l)));
      c.require(is_unifier(l, tau_subst(k), phi) == Ternary::True,
                "tau_" + std::to_string(k) + " unifies in " + std::string(to_string(l)));
    }
  }
  for (int k = 0; k <= 2; ++k) {
    for (int l = k; l <= 2; ++l) {
      c.require(equivalent(Logic::KB, compose(sigma_subst(l), lambda_subst(k)),
                           sigma_subst(k)) == Ternary::True,
                "sigma composition at " + std::to_string(k) + "," + std::to_string(l));
      c.require(equivalent(Logic::KB, compose(tau_subst(l), mu_subst(k)), tau_subst(k)) ==
                    Ternary::True,
                "tau composition at " + std::to_string(k) + "," + std::to_string(l));
    }
  }
  // Absorption vs the level test, with the level substitution itself as the
  // candidate unifier: both conditions hold exactly when l <= k.
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; l <= 2; ++l) {
      bool expect = l <= k;
      Ternary a = equivalent(Logic::KB, compose(sigma_subst(k), sigma_subst(l)),
                             sigma_subst(l));
      Verdict cv = decide(Logic::KB, Formula::imp(sigma_subst(l).image(suite_variable()),
                                                  boxplus_iter(k, Formula::bot())));
      c.require(a != Ternary::Unknown && !cv.is_unknown(),
                "grid cell " + std::to_string(k) + "," + std::to_string(l) + " indeterminate");
      bool a_val = a == Ternary::True;
      bool c_val = cv.is_valid();
      c.require(a_val == c_val, "grid cell " + std::to_string(k) + "," + std::to_string(l) +
                                    ": absorption and level test disagree");
      c.require(a_val == expect, "grid cell " + std::to_string(k) + "," + std::to_string(l) +
                                     ": pattern mismatch");
    }
  }
  c.finish(600.0);
}

void criterion_6_oracle() {
  Criterion c(6, "oracle cross-validation on low-degree suite goals");
  SuiteConfig cfg;
  cfg.logic = Logic::KB;
  std::set<std::string> seen;
  std::vector<Formula> goals;
  for (const SuiteGoal& g : suite_goals(cfg)) {
    if (g.goal.atoms().size() > 3 || g.goal.degree() > 3) continue;
    if (seen.insert(print(g.goal)).second) goals.push_back(g.goal);
  }
  c.require(goals.size() >= 20, "expected at least 20 low-degree goals, saw " +
                                    std::to_string(goals.size()));
  int disagreements = 0;
  for (const Formula& f : goals) {
    for (Logic l : {Logic::KB, Logic::KDB, Logic::KTB}) {
      Verdict v = decide(l, f);
      OracleOutcome o = brute_force_countermodel(l, f, 3);
      if (v.is_unknown() || o.kind == OracleOutcome::Kind::BudgetExceeded) {
        c.require(false, "resource bound hit on " + print(f));
        continue;
      }
      if (o.kind == OracleOutcome::Kind::Found && !v.is_invalid()) {
        ++disagreements;
        c.require(false, "oracle found a countermodel but decide says valid: " + print(f));
      }
      if (v.is_invalid()) {
        const PointedModel& pm = v.countermodel();
        if (!frame_in_class(l, pm.model.frame) || satisfies(pm.model, pm.point, f)) {
          ++disagreements;
          c.require(false, "uncertified countermodel for " + print(f));
        }
      }
    }
  }
  c.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  c.finish(600.0);
}

void criterion_7_bridges() {
  Criterion c(7, "bridge locality on randomized constructions");
  Rng rng(7007);
  std::vector<Atom> atoms = {Atom::variable("x"), param_p(), param_q()};
  int built = 0;
  for (int round = 0; round < 50; ++round) {
    int k = round % 2;
    UnravelMode mode = (round / 2) % 2 == 0 ? UnravelMode::Plain : UnravelMode::Reflexive;
    Model left = chain_model(k);
    Model right = chain_model(k);
    std::vector<State> xs;
    for (State s : left.frame.states) {
      if (rng.coin()) xs.push_back(s);
    }
    if (!xs.empty()) left.valuation[suite_variable()] = xs;
    xs.clear();
    for (State s : right.frame.states) {
      if (rng.coin()) xs.push_back(s);
    }
    if (!xs.empty()) right.valuation[suite_variable()] = xs;

    Bridge b = bridge_model({left, 0}, {right, 3 * k}, k, mode);
    ++built;
    if (mode == UnravelMode::Reflexive) {
      c.require(is_reflexive(b.model.frame), "reflexive bridge is reflexive");
    }
    c.require(is_symmetric(b.model.frame), "bridge is symmetric");
    for (int t = 0; t < 6; ++t) {
      Formula psi = random_formula(rng, 2, atoms);
      if (psi.degree() > 3 * k) continue;
      c.require(satisfies(b.model, b.left_root, psi) == satisfies(left, 0, psi),
                "left-root transfer of " + print(psi));
      c.require(satisfies(b.model, b.right_root, psi) == satisfies(right, 3 * k, psi),
                "right-root transfer of " + print(psi));
    }
  }
  c.require(built == 50, "expected 50 bridge constructions");
  c.finish(600.0);
}

void criterion_8_cli(const std::string& cli) {
  Criterion c(8, "lemma suite exits clean for kb, kdb and ktb");
  if (cli.empty()) {
    c.require(false, "no CLI path supplied");
    c.finish();
    return;
  }
  for (const char* logic : {"kb", "kdb", "ktb"}) {
    std::string cmd = "\"" + cli + "\" lemmas run --logic " + logic +
                      " --k-max 2 --l-max 2 > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    c.require(rc == 0, std::string("lemmas run --logic ") + logic + " exited with " +
                           std::to_string(rc));
  }
  c.finish(1800.0);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  criterion_1_degrees();
  criterion_2_chains();
  criterion_3_positives();
  criterion_4_negatives();
  criterion_5_unification();
  criterion_6_oracle();
  criterion_7_bridges();
  criterion_8_cli(cli);
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria failed\n", failures);
  }
  return failures;
}
