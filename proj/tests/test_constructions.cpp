#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modal/constructions.hpp"
#include "modal/prover.hpp"
#include "modal/sampling.hpp"

using namespace modal;

namespace {

Formula x() { return Formula::atom(suite_variable()); }

}  // namespace

TEST_CASE("level substitutions: base cases and unfoldings") {
  CHECK(sigma_subst(0).image(suite_variable()) == Formula::bot());
  CHECK(tau_subst(0).image(suite_variable()) == Formula::top());
  CHECK(sigma_subst(1).image(suite_variable()) ==
        Formula::conj(x(), boxplus(Formula::bot())));
  CHECK(sigma_subst(2).image(suite_variable()) ==
        Formula::conj(x(), boxplus(Formula::conj(x(), boxplus(Formula::bot())))));
  CHECK(tau_subst(1).image(suite_variable()) ==
        Formula::neg(Formula::conj(Formula::neg(x()), boxminus(Formula::neg(Formula::top())))));
  CHECK(lambda_subst(0).image(suite_variable()) == Formula::conj(x(), Formula::bot()));
  CHECK(lambda_subst(2).image(suite_variable()) ==
        Formula::conj(x(), boxplus_iter(2, Formula::bot())));
  CHECK(mu_subst(1).image(suite_variable()) ==
        Formula::neg(Formula::conj(Formula::neg(x()), boxminus(Formula::bot()))));
  for (int k = 0; k <= 3; ++k) {
    CHECK(sigma_subst(k).support().size() == 1);
    CHECK(tau_subst(k).support().size() == 1);
  }
  CHECK_THROWS_AS(sigma_subst(-1), std::invalid_argument);
}

TEST_CASE("level substitutions: composition equivalences") {
  CHECK(equivalent(Logic::KB, compose(sigma_subst(2), lambda_subst(1)), sigma_subst(1)) ==
        Ternary::True);
  CHECK(equivalent(Logic::KB, compose(tau_subst(2), mu_subst(1)), tau_subst(1)) ==
        Ternary::True);
  CHECK(equivalent(Logic::KB, compose(sigma_subst(1), lambda_subst(2)), sigma_subst(2)) ==
        Ternary::False);
}

TEST_CASE("the suite formula") {
  Formula phi = nullary_formula();
  CHECK(phi.degree() == 3);
  CHECK(phi.variables() == std::set<Atom>{suite_variable()});
  CHECK(phi.parameters() == std::set<Atom>{param_p(), param_q()});
  CHECK(phi == Formula::conj(Formula::imp(x(), boxplus(x())),
                             Formula::imp(Formula::neg(x()), boxminus(Formula::neg(x())))));
  for (int k = 0; k <= 2; ++k) {
    CHECK(is_unifier(Logic::KB, sigma_subst(k), phi) == Ternary::True);
    CHECK(is_unifier(Logic::KB, tau_subst(k), phi) == Ternary::True);
  }
}

TEST_CASE("witness paths on chains") {
  CHECK(extract_witness_path(chain_model(1), 0, 1, Polarity::Plus).states ==
        std::vector<State>{0, 1, 2, 3});
  CHECK(extract_witness_path(chain_model(2), 0, 2, Polarity::Plus).states ==
        std::vector<State>{0, 1, 2, 3, 4, 5, 6});
  CHECK(extract_witness_path(chain_model(1), 3, 1, Polarity::Minus).states ==
        std::vector<State>{3, 2, 1, 0});
  CHECK(extract_witness_path(chain_model(0), 0, 0, Polarity::Plus).states ==
        std::vector<State>{0});
}

TEST_CASE("witness paths: labels are validated by the model checker") {
  for (int k = 0; k <= 2; ++k) {
    Model m = chain_model(k);
    WitnessPath path = extract_witness_path(m, 0, k, Polarity::Plus);
    REQUIRE(path.states.size() == static_cast<std::size_t>(3 * k + 1));
    for (int i = 0; i < static_cast<int>(path.states.size()); ++i) {
      State v = path.states[i];
      bool p = satisfies(m, v, Formula::atom(param_p()));
      bool q = satisfies(m, v, Formula::atom(param_q()));
      switch (i % 3) {
        case 0: CHECK((!p && !q)); break;
        case 1: CHECK((p && !q)); break;
        case 2: CHECK((!p && q)); break;
      }
      if (i > 0) CHECK(m.frame.related(path.states[i - 1], path.states[i]));
    }
  }
}

TEST_CASE("witness paths: precondition violations") {
  // The level formula holds at a state without the guard pattern around it.
  Model single;
  single.frame.states = {0};
  single.frame.rel = {{0, 0}};
  CHECK_THROWS_AS(extract_witness_path(single, 0, 1, Polarity::Plus), std::invalid_argument);
  // Root with the wrong labels.
  Model m = chain_model(1);
  CHECK_THROWS_AS(extract_witness_path(m, 1, 1, Polarity::Plus), std::invalid_argument);
  // Non-symmetric host.
  Model oneway;
  oneway.frame.states = {0, 1};
  oneway.frame.rel = {{0, 1}};
  CHECK_THROWS_AS(extract_witness_path(oneway, 0, 0, Polarity::Plus), std::invalid_argument);
}

TEST_CASE("witness paths: found on noisy hosts whenever the level fails") {
  Rng rng(61);
  std::vector<Atom> atoms = {param_p(), param_q(), Atom::variable("x")};
  int found = 0;
  for (int i = 0; i < 80; ++i) {
    Model m = random_symmetric_model(rng, 5, atoms, false);
    for (int k = 0; k <= 1; ++k) {
      for (Polarity pol : {Polarity::Plus, Polarity::Minus}) {
        Formula level = pol == Polarity::Plus ? boxplus_iter(k, Formula::bot())
                                              : boxminus_iter(k, Formula::bot());
        for (State s : m.frame.states) {
          bool root_ok = !satisfies(m, s, Formula::atom(param_p())) &&
                         !satisfies(m, s, Formula::atom(param_q()));
          if (!root_ok || satisfies(m, s, level)) continue;
          WitnessPath path = extract_witness_path(m, s, k, pol);
          CHECK(path.states.size() == static_cast<std::size_t>(3 * k + 1));
          CHECK(path.states.front() == s);
          ++found;
        }
      }
    }
  }
  CHECK(found > 20);
}

TEST_CASE("bridge: shape and labels") {
  Model left = chain_model(1);
  Model right = chain_model(1);
  Bridge b = bridge_model({left, 0}, {right, 3}, 1, UnravelMode::Plain);

  Unravelling ul = symmetric_unravelling(left, 0, 8, UnravelMode::Plain);
  Unravelling ur = symmetric_unravelling(right, 3, 8, UnravelMode::Plain);
  CHECK(b.model.frame.states.size() ==
        ul.pointed.model.frame.states.size() + ur.pointed.model.frame.states.size() + 2);

  CHECK(is_symmetric(b.model.frame));
  // t carries p only, u carries q only.
  CHECK(satisfies(b.model, b.t_state, parse("#p & ~#q")));
  CHECK(satisfies(b.model, b.u_state, parse("~#p & #q")));
  // The fresh edges: end+ <-> t <-> u <-> end-, with loops on t and u.
  CHECK(b.model.frame.related(b.left_end, b.t_state));
  CHECK(b.model.frame.related(b.t_state, b.left_end));
  CHECK(b.model.frame.related(b.t_state, b.t_state));
  CHECK(b.model.frame.related(b.t_state, b.u_state));
  CHECK(b.model.frame.related(b.u_state, b.u_state));
  CHECK(b.model.frame.related(b.u_state, b.right_end));
  CHECK_FALSE(b.model.frame.related(b.left_end, b.u_state));
  CHECK_FALSE(b.model.frame.related(b.left_root, b.t_state));

  Bridge rb = bridge_model({left, 0}, {right, 3}, 1, UnravelMode::Reflexive);
  CHECK(is_reflexive(rb.model.frame));
}

TEST_CASE("bridge: k = 0 attaches to the roots") {
  Model left = chain_model(0);
  left.valuation[suite_variable()] = {0};
  Model right = chain_model(0);
  Bridge b = bridge_model({left, 0}, {right, 0}, 0, UnravelMode::Plain);
  CHECK(b.left_end == b.left_root);
  CHECK(b.right_end == b.right_root);
  // Degree-0 transfer: x holds at the left root, fails at the right root.
  CHECK(satisfies(b.model, b.left_root, x()));
  CHECK_FALSE(satisfies(b.model, b.right_root, x()));
}

TEST_CASE("bridge: root satisfaction transfers up to degree 3k") {
  Rng rng(83);
  std::vector<Atom> atoms = {Atom::variable("x"), param_p(), param_q()};
  for (int round = 0; round < 30; ++round) {
    int k = static_cast<int>(rng.below(2));
    UnravelMode mode = rng.coin() ? UnravelMode::Plain : UnravelMode::Reflexive;
    Model left = chain_model(k);
    Model right = chain_model(k);
    std::vector<State> xs;
    for (State s : left.frame.states) {
      if (rng.coin()) xs.push_back(s);
    }
    if (!xs.empty()) left.valuation[suite_variable()] = xs;
    Bridge b = bridge_model({left, 0}, {right, 3 * k}, k, mode);
    for (int t = 0; t < 4; ++t) {
      Formula psi = random_formula(rng, 2, atoms);
      if (psi.degree() > 3 * k) continue;
      CHECK(satisfies(b.model, b.left_root, psi) == satisfies(left, 0, psi));
      CHECK(satisfies(b.model, b.right_root, psi) == satisfies(right, 3 * k, psi));
    }
  }
}

TEST_CASE("bridge: precondition violations surface") {
  Model ok = chain_model(1);
  Model bad = chain_model(1);
  bad.valuation[param_p()] = {0, 1};  // root now satisfies p
  CHECK_THROWS_AS(bridge_model({bad, 0}, {ok, 3}, 1, UnravelMode::Plain),
                  std::invalid_argument);
  CHECK_THROWS_AS(bridge_model({ok, 0}, {ok, 3}, 1, UnravelMode::Plain, 2),
                  std::invalid_argument);  // depth below the witness path
}
