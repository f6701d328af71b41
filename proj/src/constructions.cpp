#include "modal/constructions.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace modal {

const Atom& suite_variable() {
  static const Atom x = Atom::variable("x");
  return x;
}

namespace {

Formula var_x() { return Formula::atom(suite_variable()); }

void check_level(int k) {
  if (k < 0) throw std::invalid_argument("construction level must be nonnegative");
}

}  // namespace

Substitution sigma_subst(int k) {
  check_level(k);
  Formula image = Formula::bot();
  for (int i = 0; i < k; ++i) image = Formula::conj(var_x(), boxplus(std::move(image)));
  Substitution s;
  s.set(suite_variable(), std::move(image));
  return s;
}

Substitution tau_subst(int k) {
  check_level(k);
  Formula image = Formula::top();
  for (int i = 0; i < k; ++i) {
    image = Formula::neg(
        Formula::conj(Formula::neg(var_x()), boxminus(Formula::neg(std::move(image)))));
  }
  Substitution s;
  s.set(suite_variable(), std::move(image));
  return s;
}

Substitution lambda_subst(int k) {
  check_level(k);
  Substitution s;
  s.set(suite_variable(), Formula::conj(var_x(), boxplus_iter(k, Formula::bot())));
  return s;
}

Substitution mu_subst(int k) {
  check_level(k);
  Substitution s;
  s.set(suite_variable(),
        Formula::neg(Formula::conj(Formula::neg(var_x()),
                                   boxminus_iter(k, Formula::bot()))));
  return s;
}

Formula nullary_formula() {
  Formula x = var_x();
  return Formula::conj(Formula::imp(x, boxplus(x)),
                       Formula::imp(Formula::neg(x), boxminus(Formula::neg(x))));
}

namespace {

enum class Label { VV, T, U };  // ~p&~q, p&~q, ~p&q

bool has_label(const Model& m, State s, Label l) {
  bool p = m.atom_true_at(param_p(), s);
  bool q = m.atom_true_at(param_q(), s);
  switch (l) {
    case Label::VV: return !p && !q;
    case Label::T: return p && !q;
    case Label::U: return !p && q;
  }
  return false;
}

bool dfs_path(const Model& m, const std::map<State, std::vector<State>>& succ, State current,
              int blocks_left, const std::vector<Label>& block_labels,
              std::vector<State>& path) {
  if (blocks_left == 0) return true;
  auto it = succ.find(current);
  if (it == succ.end()) return false;
  for (State t : it->second) {
    if (!has_label(m, t, block_labels[0])) continue;
    auto jt = succ.find(t);
    if (jt == succ.end()) continue;
    for (State u : jt->second) {
      if (!has_label(m, u, block_labels[1])) continue;
      auto kt = succ.find(u);
      if (kt == succ.end()) continue;
      for (State v : kt->second) {
        if (!has_label(m, v, Label::VV)) continue;
        path.push_back(t);
        path.push_back(u);
        path.push_back(v);
        if (dfs_path(m, succ, v, blocks_left - 1, block_labels, path)) return true;
        path.resize(path.size() - 3);
      }
    }
  }
  return false;
}

}  // namespace

WitnessPath extract_witness_path(const Model& m, State s, int k, Polarity polarity) {
  check_level(k);
  m.validate();
  if (!m.frame.has_state(s)) {
    throw std::out_of_range("unknown state identifier " + std::to_string(s));
  }
  if (!is_symmetric(m.frame)) {
    throw std::invalid_argument("extract_witness_path requires a symmetric frame");
  }
  Formula level = polarity == Polarity::Plus ? boxplus_iter(k, Formula::bot())
                                             : boxminus_iter(k, Formula::bot());
  if (satisfies(m, s, level)) {
    throw std::invalid_argument("precondition violated: the level formula holds at the root");
  }
  if (!has_label(m, s, Label::VV)) {
    throw std::invalid_argument("precondition violated: the root must satisfy ~#p & ~#q");
  }

  std::map<State, std::vector<State>> succ;
  for (const auto& [a, b] : m.frame.rel) succ[a].push_back(b);

  std::vector<Label> block_labels = polarity == Polarity::Plus
                                        ? std::vector<Label>{Label::T, Label::U}
                                        : std::vector<Label>{Label::U, Label::T};
  WitnessPath path;
  path.polarity = polarity;
  path.states.push_back(s);
  if (!dfs_path(m, succ, s, k, block_labels, path.states)) {
    // The level formula fails at s, so the guard pattern must be realizable.
    throw std::logic_error("witness path extraction failed on a precondition-satisfying input");
  }
  return path;
}

Bridge bridge_model(const PointedModel& plus_side, const PointedModel& minus_side, int k,
                    UnravelMode mode, int depth_override, std::size_t state_budget) {
  check_level(k);
  plus_side.validate();
  minus_side.validate();
  WitnessPath plus_path =
      extract_witness_path(plus_side.model, plus_side.point, k, Polarity::Plus);
  WitnessPath minus_path =
      extract_witness_path(minus_side.model, minus_side.point, k, Polarity::Minus);

  int depth = depth_override >= 0 ? depth_override : 6 * k + 2;
  if (depth < 3 * k) throw std::invalid_argument("bridge depth must cover the witness paths");

  Unravelling left =
      symmetric_unravelling(plus_side.model, plus_side.point, depth, mode, state_budget);
  Unravelling right =
      symmetric_unravelling(minus_side.model, minus_side.point, depth, mode, state_budget);

  auto find_path_state = [](const Unravelling& u, const std::vector<State>& want) {
    for (State i = 0; i < static_cast<State>(u.paths.size()); ++i) {
      if (u.paths[i] == want) return i;
    }
    throw std::logic_error("witness path is missing from the unravelling");
  };
  State left_end_local = find_path_state(left, plus_path.states);
  State right_end_local = find_path_state(right, minus_path.states);

  DisjointUnion du = disjoint_union({left.pointed.model, right.pointed.model});
  Bridge out;
  out.left_root = du.injections[0].at(left.pointed.point);
  out.right_root = du.injections[1].at(right.pointed.point);
  out.left_end = du.injections[0].at(left_end_local);
  out.right_end = du.injections[1].at(right_end_local);
  out.model = std::move(du.model);

  State t = static_cast<State>(out.model.frame.states.size());
  State u = t + 1;
  out.t_state = t;
  out.u_state = u;
  out.model.frame.states.push_back(t);
  out.model.frame.states.push_back(u);
  auto& rel = out.model.frame.rel;
  rel.emplace_back(out.left_end, t);
  rel.emplace_back(t, out.left_end);
  rel.emplace_back(t, t);
  rel.emplace_back(t, u);
  rel.emplace_back(u, t);
  rel.emplace_back(u, u);
  rel.emplace_back(u, out.right_end);
  rel.emplace_back(out.right_end, u);
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());

  auto insert_state = [](std::vector<State>& states, State s) {
    states.insert(std::lower_bound(states.begin(), states.end(), s), s);
  };
  insert_state(out.model.valuation[param_p()], t);
  insert_state(out.model.valuation[param_q()], u);

  out.model.validate();
  return out;
}

}  // namespace modal
