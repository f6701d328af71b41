#include "modal/kripke.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace modal {

namespace {

template <typename T>
bool sorted_unique(const std::vector<T>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i - 1] < v[i])) return false;
  }
  return true;
}

}  // namespace

bool Frame::has_state(State s) const {
  return std::binary_search(states.begin(), states.end(), s);
}

bool Frame::related(State s, State t) const {
  return std::binary_search(rel.begin(), rel.end(), std::make_pair(s, t));
}

void Frame::validate() const {
  if (states.empty()) throw std::invalid_argument("frame must have at least one state");
  if (!sorted_unique(states)) throw std::invalid_argument("frame states must be sorted and unique");
  if (!sorted_unique(rel)) throw std::invalid_argument("frame relation must be sorted and unique");
  for (const auto& [s, t] : rel) {
    if (!has_state(s) || !has_state(t)) {
      throw std::invalid_argument("relation endpoint is not a state");
    }
  }
}

bool is_symmetric(const Frame& fr) {
  for (const auto& [s, t] : fr.rel) {
    if (!fr.related(t, s)) return false;
  }
  return true;
}

bool is_serial(const Frame& fr) {
  for (State s : fr.states) {
    auto it = std::lower_bound(fr.rel.begin(), fr.rel.end(),
                               std::make_pair(s, std::numeric_limits<State>::min()));
    if (it == fr.rel.end() || it->first != s) return false;
  }
  return true;
}

bool is_reflexive(const Frame& fr) {
  for (State s : fr.states) {
    if (!fr.related(s, s)) return false;
  }
  return true;
}

bool Model::atom_true_at(const Atom& a, State s) const {
  auto it = valuation.find(a);
  if (it == valuation.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), s);
}

void Model::validate() const {
  frame.validate();
  for (const auto& [atom, states] : valuation) {
    if (!sorted_unique(states)) {
      throw std::invalid_argument("valuation of " + atom.text() + " must be sorted and unique");
    }
    for (State s : states) {
      if (!frame.has_state(s)) {
        throw std::invalid_argument("valuation of " + atom.text() + " mentions unknown state " +
                                    std::to_string(s));
      }
    }
  }
}

void PointedModel::validate() const {
  model.validate();
  if (!model.frame.has_state(point)) {
    throw std::invalid_argument("point " + std::to_string(point) + " is not a state");
  }
}

namespace {

// Bottom-up truth tables over the subformula DAG: one pass per node, each
// state evaluated once.
class Evaluator {
 public:
  explicit Evaluator(const Model& m) : m_(m) {
    index_.reserve(m.frame.states.size());
    for (std::size_t i = 0; i < m.frame.states.size(); ++i) {
      index_[m.frame.states[i]] = i;
    }
    succ_.resize(m.frame.states.size());
    for (const auto& [s, t] : m.frame.rel) {
      succ_[index_.at(s)].push_back(index_.at(t));
    }
  }

  bool truth_at(const Formula& f, State s) {
    auto it = index_.find(s);
    if (it == index_.end()) {
      throw std::out_of_range("unknown state identifier " + std::to_string(s));
    }
    return table(f)[it->second] != 0;
  }

  bool everywhere(const Formula& f) {
    const auto& t = table(f);
    return std::all_of(t.begin(), t.end(), [](char v) { return v != 0; });
  }

 private:
  const std::vector<char>& table(const Formula& f) {
    auto it = memo_.find(f.raw());
    if (it != memo_.end()) return it->second;
    std::size_t n = m_.frame.states.size();
    std::vector<char> t(n, 0);
    switch (f.kind()) {
      case Formula::Kind::Bot:
        break;
      case Formula::Kind::Atom: {
        const Atom& a = f.atom_ref();
        for (std::size_t i = 0; i < n; ++i) t[i] = m_.atom_true_at(a, m_.frame.states[i]);
        break;
      }
      case Formula::Kind::Neg: {
        const auto& c = table(f.child());
        for (std::size_t i = 0; i < n; ++i) t[i] = !c[i];
        break;
      }
      case Formula::Kind::Or: {
        const auto& l = table(f.left());
        const auto& r = table(f.right());
        for (std::size_t i = 0; i < n; ++i) t[i] = l[i] || r[i];
        break;
      }
      case Formula::Kind::Box: {
        const auto& c = table(f.child());
        for (std::size_t i = 0; i < n; ++i) {
          char all = 1;
          for (std::size_t j : succ_[i]) {
            if (!c[j]) { all = 0; break; }
          }
          t[i] = all;
        }
        break;
      }
    }
    return memo_.emplace(f.raw(), std::move(t)).first->second;
  }

  const Model& m_;
  std::unordered_map<State, std::size_t> index_;
  std::vector<std::vector<std::size_t>> succ_;
  std::unordered_map<const Formula::Node*, std::vector<char>> memo_;
};

}  // namespace

bool satisfies(const Model& m, State s, const Formula& f) {
  Evaluator ev(m);
  return ev.truth_at(f, s);
}

bool is_true_in_model(const Model& m, const Formula& f) {
  Evaluator ev(m);
  return ev.everywhere(f);
}

Model chain_model(int k) {
  if (k < 0) throw std::invalid_argument("chain_model requires k >= 0");
  Model m;
  std::vector<State> p_states, q_states;
  for (State i = 0; i <= 3 * k; ++i) {
    m.frame.states.push_back(i);
    if (i % 3 == 1) p_states.push_back(i);
    if (i % 3 == 2) q_states.push_back(i);
  }
  for (State i = 0; i <= 3 * k; ++i) {
    for (State j = std::max(0, i - 1); j <= std::min(3 * k, i + 1); ++j) {
      m.frame.rel.emplace_back(i, j);
    }
  }
  if (!p_states.empty()) m.valuation[param_p()] = std::move(p_states);
  if (!q_states.empty()) m.valuation[param_q()] = std::move(q_states);
  return m;
}

DisjointUnion disjoint_union(const std::vector<Model>& models) {
  if (models.empty()) throw std::invalid_argument("disjoint_union requires at least one model");
  DisjointUnion out;
  State next = 0;
  std::map<Atom, std::vector<State>> val;
  for (const Model& m : models) {
    std::unordered_map<State, State> inj;
    for (State s : m.frame.states) {
      inj[s] = next;
      out.model.frame.states.push_back(next);
      ++next;
    }
    for (const auto& [s, t] : m.frame.rel) {
      out.model.frame.rel.emplace_back(inj.at(s), inj.at(t));
    }
    for (const auto& [atom, states] : m.valuation) {
      for (State s : states) val[atom].push_back(inj.at(s));
    }
    out.injections.push_back(std::move(inj));
  }
  std::sort(out.model.frame.rel.begin(), out.model.frame.rel.end());
  for (auto& [atom, states] : val) {
    std::sort(states.begin(), states.end());
  }
  out.model.valuation = std::move(val);
  return out;
}

Unravelling symmetric_unravelling(const Model& m, State around, int depth, UnravelMode mode,
                                  std::size_t state_budget) {
  m.validate();
  if (!m.frame.has_state(around)) {
    throw std::out_of_range("unknown state identifier " + std::to_string(around));
  }
  if (depth < 0) throw std::invalid_argument("unravelling depth must be nonnegative");
  if (!is_symmetric(m.frame)) {
    throw std::invalid_argument("symmetric_unravelling requires a symmetric frame");
  }

  // Successor lists in ascending state order for deterministic ids.
  std::unordered_map<State, std::vector<State>> succ;
  for (const auto& [s, t] : m.frame.rel) succ[s].push_back(t);

  Unravelling out;
  out.paths.push_back({around});
  std::vector<std::pair<State, State>> edges;  // tree edges (parent id, child id)
  std::deque<std::pair<State, int>> frontier;  // (path id, length in steps)
  frontier.emplace_back(0, 0);
  while (!frontier.empty()) {
    auto [id, len] = frontier.front();
    frontier.pop_front();
    if (len == depth) continue;
    State last = out.paths[id].back();
    auto it = succ.find(last);
    if (it == succ.end()) continue;
    for (State t : it->second) {
      if (out.paths.size() >= state_budget) {
        throw StateBudgetError("unravelling exceeds the state budget of " +
                               std::to_string(state_budget) + " states");
      }
      State child = static_cast<State>(out.paths.size());
      std::vector<State> path = out.paths[id];
      path.push_back(t);
      out.paths.push_back(std::move(path));
      edges.emplace_back(id, child);
      frontier.emplace_back(child, len + 1);
    }
  }

  Model& um = out.pointed.model;
  for (State i = 0; i < static_cast<State>(out.paths.size()); ++i) um.frame.states.push_back(i);
  for (const auto& [a, b] : edges) {
    um.frame.rel.emplace_back(a, b);
    um.frame.rel.emplace_back(b, a);
  }
  if (mode == UnravelMode::Reflexive) {
    for (State i : um.frame.states) um.frame.rel.emplace_back(i, i);
  }
  std::sort(um.frame.rel.begin(), um.frame.rel.end());
  um.frame.rel.erase(std::unique(um.frame.rel.begin(), um.frame.rel.end()), um.frame.rel.end());

  for (const auto& [atom, states] : m.valuation) {
    std::vector<State> pulled;
    for (State i = 0; i < static_cast<State>(out.paths.size()); ++i) {
      if (std::binary_search(states.begin(), states.end(), out.paths[i].back())) {
        pulled.push_back(i);
      }
    }
    if (!pulled.empty()) um.valuation[atom] = std::move(pulled);
  }
  out.pointed.point = 0;
  return out;
}

nlohmann::ordered_json model_to_json(const Model& m) {
  nlohmann::ordered_json j;
  j["states"] = m.frame.states;
  auto rel = nlohmann::ordered_json::array();
  for (const auto& [s, t] : m.frame.rel) rel.push_back({s, t});
  j["rel"] = std::move(rel);
  auto val = nlohmann::ordered_json::object();
  for (const auto& [atom, states] : m.valuation) {
    if (!states.empty()) val[atom.text()] = states;
  }
  j["val"] = std::move(val);
  return j;
}

nlohmann::ordered_json pointed_model_to_json(const PointedModel& pm) {
  nlohmann::ordered_json j = model_to_json(pm.model);
  j["point"] = pm.point;
  return j;
}

namespace {

Atom atom_from_text(const std::string& text) {
  if (!text.empty() && text[0] == '#') return Atom::parameter(text.substr(1));
  return Atom::variable(text);
}

}  // namespace

Model model_from_json(const nlohmann::json& j) {
  Model m;
  m.frame.states = j.at("states").get<std::vector<State>>();
  std::sort(m.frame.states.begin(), m.frame.states.end());
  for (const auto& pair : j.at("rel")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("rel entries must be [from, to] pairs");
    }
    m.frame.rel.emplace_back(pair[0].get<State>(), pair[1].get<State>());
  }
  std::sort(m.frame.rel.begin(), m.frame.rel.end());
  m.frame.rel.erase(std::unique(m.frame.rel.begin(), m.frame.rel.end()), m.frame.rel.end());
  if (j.contains("val")) {
    for (const auto& [name, states] : j.at("val").items()) {
      std::vector<State> ss = states.get<std::vector<State>>();
      std::sort(ss.begin(), ss.end());
      ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
      m.valuation[atom_from_text(name)] = std::move(ss);
    }
  }
  m.validate();
  return m;
}

PointedModel pointed_model_from_json(const nlohmann::json& j) {
  PointedModel pm;
  pm.model = model_from_json(j);
  if (!j.contains("point")) throw std::invalid_argument("pointed model requires a \"point\"");
  pm.point = j.at("point").get<State>();
  pm.validate();
  return pm;
}

}  // namespace modal
