#include "modal/prover.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <unordered_map>
#include <vector>

namespace modal {

std::string_view to_string(Logic l) {
  switch (l) {
    case Logic::KB: return "kb";
    case Logic::KDB: return "kdb";
    case Logic::KTB: return "ktb";
  }
  return "?";
}

Logic logic_from_string(std::string_view name) {
  if (name == "kb" || name == "KB") return Logic::KB;
  if (name == "kdb" || name == "KDB") return Logic::KDB;
  if (name == "ktb" || name == "KTB") return Logic::KTB;
  throw std::invalid_argument("unknown logic '" + std::string(name) + "' (expected kb, kdb, ktb)");
}

bool frame_in_class(Logic l, const Frame& fr) {
  if (!is_symmetric(fr)) return false;
  switch (l) {
    case Logic::KB: return true;
    case Logic::KDB: return is_serial(fr);
    case Logic::KTB: return is_reflexive(fr);
  }
  return false;
}

std::string_view to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Valid: return "valid";
    case Verdict::Kind::Invalid: return "invalid";
    case Verdict::Kind::Unknown: return "unknown";
  }
  return "?";
}

Verdict Verdict::invalid(PointedModel counter) {
  counter.validate();
  Verdict v(Kind::Invalid);
  v.counter_ = std::move(counter);
  return v;
}

Verdict Verdict::unknown(std::string reason) {
  Verdict v(Kind::Unknown);
  v.reason_ = std::move(reason);
  return v;
}

const PointedModel& Verdict::countermodel() const {
  if (!counter_) throw std::logic_error("countermodel() on a verdict that is not Invalid");
  return *counter_;
}

const std::string& Verdict::reason() const { return reason_; }

// ---------------------------------------------------------------------------
// Tableau engine
// ---------------------------------------------------------------------------
//
// Satisfiability search for ~f over an explicitly-constructed symmetric world
// graph.  Labels are signed subformula sets stored as bitsets over the
// closure of the goal; negations are normalized away at insertion, so a label
// entry is always (item, sign) with item one of {false, atom, |, []}.
//
// Rules, in deterministic scan order (worlds ascending, items ascending):
//   - alpha: (a|b, -) decomposes eagerly at insertion;
//   - beta shortcuts: a (a|b, +) whose disjunct is already present is done,
//     one whose disjunct is refuted forces the other;
//   - box propagation: ([]c, +) at w puts c at every neighbor of w (the edge
//     relation is symmetric, so this also constrains a world's parent);
//   - branching beta: first unresolved (a|b, +), explored left then right;
//   - diamond: first unfulfilled ([]c, -) creates a successor seeded with ~c
//     plus the unboxings of its parent, with both edge directions added.
//     Before its first expansion a world whose full label equals that of an
//     ancestor is merged back onto that ancestor, creating a cycle in the
//     candidate model; the merge is a backtrack point, so a failed merged
//     branch falls back to plain expansion.
//   - seriality (KDB): a world with no neighbor gets a successor carrying its
//     unboxings.  KTB worlds carry a self-loop from birth, which makes box
//     propagation implement the reflexivity rule.
//
// Saturated open graphs are turned into candidate models and certified by the
// model checker before an Invalid verdict is produced; closed tableaux yield
// Valid.  The node budget covers worlds created plus branch points explored.

namespace {

struct Closure {
  std::vector<Formula> items;  // post-order: children precede parents
  std::unordered_map<Formula, int, FormulaHasher> index;
  struct Info {
    Formula::Kind op;
    int a = -1;        // child (Neg/Box) or left (Or)
    int b = -1;        // right (Or)
    int norm = -1;     // first non-Neg descendant
    bool flip = false; // sign parity accumulated through Neg
  };
  std::vector<Info> info;
  std::vector<int> atom_items;

  int add(const Formula& f) {
    auto it = index.find(f);
    if (it != index.end()) return it->second;
    Info in;
    in.op = f.kind();
    switch (f.kind()) {
      case Formula::Kind::Bot:
      case Formula::Kind::Atom:
        break;
      case Formula::Kind::Neg:
      case Formula::Kind::Box:
        in.a = add(f.child());
        break;
      case Formula::Kind::Or:
        in.a = add(f.left());
        in.b = add(f.right());
        break;
    }
    int id = static_cast<int>(items.size());
    if (f.kind() == Formula::Kind::Neg) {
      in.norm = info[in.a].norm;
      in.flip = !info[in.a].flip;
    } else {
      in.norm = id;
      in.flip = false;
    }
    items.push_back(f);
    info.push_back(in);
    index.emplace(f, id);
    if (f.kind() == Formula::Kind::Atom) atom_items.push_back(id);
    return id;
  }

  // (item, sign) with Neg stripped.
  std::pair<int, bool> norm(int item, bool sign) const {
    return {info[item].norm, info[item].flip ? !sign : sign};
  }
};

struct Bits {
  std::vector<std::uint64_t> w;
  Bits() = default;
  explicit Bits(std::size_t n) : w((n + 63) / 64, 0) {}
  bool get(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool operator==(const Bits& o) const { return w == o.w; }
};

struct World {
  Bits pos, neg;
  Bits beta_done;          // (a|b, +) items already resolved or branched
  std::vector<int> nbrs;   // symmetric adjacency; may include the world itself
  int parent = -1;
  bool alive = true;
  bool expanded = false;   // first modal expansion (merge check) happened
};

struct TState {
  std::vector<World> worlds;
  bool clash = false;
};

class Tableau {
 public:
  enum class Res { Sat, Unsat, Budget };

  Tableau(Logic logic, const ProverConfig& cfg, const Formula& goal_negation)
      : logic_(logic), cfg_(cfg) {
    root_item_ = closure_.add(goal_negation);
    n_ = closure_.items.size();
  }

  Res run(TState& st) {
    st.worlds.clear();
    st.clash = false;
    new_world(st, -1);
    add(st, 0, root_item_, true);
    return saturate(st);
  }

  const Closure& closure() const { return closure_; }
  std::int64_t nodes_used() const { return nodes_; }

 private:
  int new_world(TState& st, int parent) {
    World w;
    w.pos = Bits(n_);
    w.neg = Bits(n_);
    w.beta_done = Bits(n_);
    w.parent = parent;
    st.worlds.push_back(std::move(w));
    int id = static_cast<int>(st.worlds.size()) - 1;
    if (logic_ == Logic::KTB) st.worlds[id].nbrs.push_back(id);
    return id;
  }

  bool present(const TState& st, int w, int item, bool sign) const {
    return sign ? st.worlds[w].pos.get(item) : st.worlds[w].neg.get(item);
  }

  // Inserts (item, sign) normalized; eagerly decomposes ~ and (a|b, -).
  void add(TState& st, int w, int item, bool sign) {
    auto [i, s] = closure_.norm(item, sign);
    World& world = st.worlds[w];
    Bits& mine = s ? world.pos : world.neg;
    Bits& other = s ? world.neg : world.pos;
    if (mine.get(i)) return;
    mine.set(i);
    if (other.get(i)) {
      st.clash = true;
      return;
    }
    const auto& in = closure_.info[i];
    if (in.op == Formula::Kind::Bot && s) {
      st.clash = true;
      return;
    }
    if (in.op == Formula::Kind::Or && !s) {
      add(st, w, in.a, false);
      if (st.clash) return;
      add(st, w, in.b, false);
    }
  }

  void add_unboxings(TState& st, int from, int to) {
    const World& src = st.worlds[from];
    for (std::size_t word = 0; word < src.pos.w.size(); ++word) {
      std::uint64_t bits = src.pos.w[word] & box_mask_.w[word];
      while (bits) {
        int i = static_cast<int>(word * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        add(st, to, closure_.info[i].a, true);
        if (st.clash) return;
      }
    }
  }

  void merge(TState& st, int w, int a) {
    World& child = st.worlds[w];
    child.alive = false;
    int p = child.parent;
    World& parent = st.worlds[p];
    std::erase(parent.nbrs, w);
    if (std::find(parent.nbrs.begin(), parent.nbrs.end(), a) == parent.nbrs.end()) {
      parent.nbrs.push_back(a);
    }
    World& anc = st.worlds[a];
    if (std::find(anc.nbrs.begin(), anc.nbrs.end(), p) == anc.nbrs.end()) {
      anc.nbrs.push_back(p);
    }
  }

  // One deterministic saturation wave; returns true when anything changed.
  bool deterministic_wave(TState& st) {
    bool progressed = false;
    for (int w = 0; w < static_cast<int>(st.worlds.size()) && !st.clash; ++w) {
      World& world = st.worlds[w];
      if (!world.alive) continue;
      // Beta shortcuts.
      for (std::size_t word = 0; word < world.pos.w.size(); ++word) {
        std::uint64_t bits = world.pos.w[word] & or_mask_.w[word] & ~world.beta_done.w[word];
        while (bits && !st.clash) {
          int i = static_cast<int>(word * 64 + std::countr_zero(bits));
          bits &= bits - 1;
          const auto& in = closure_.info[i];
          auto [la, ls] = closure_.norm(in.a, true);
          auto [ra, rs] = closure_.norm(in.b, true);
          if (present(st, w, la, ls) || present(st, w, ra, rs)) {
            world.beta_done.set(i);
            progressed = true;
          } else if (present(st, w, la, !ls) && present(st, w, ra, !rs)) {
            st.clash = true;
          } else if (present(st, w, la, !ls)) {
            world.beta_done.set(i);
            add(st, w, ra, rs);
            progressed = true;
          } else if (present(st, w, ra, !rs)) {
            world.beta_done.set(i);
            add(st, w, la, ls);
            progressed = true;
          }
        }
      }
      if (st.clash) break;
      // Box propagation across every (symmetric) edge.
      for (std::size_t word = 0; word < world.pos.w.size(); ++word) {
        std::uint64_t bits = world.pos.w[word] & box_mask_.w[word];
        while (bits && !st.clash) {
          int i = static_cast<int>(word * 64 + std::countr_zero(bits));
          bits &= bits - 1;
          auto [c, csign] = closure_.norm(closure_.info[i].a, true);
          for (int v : st.worlds[w].nbrs) {
            if (!present(st, v, c, csign)) {
              add(st, v, c, csign);
              progressed = true;
              if (st.clash) break;
            }
          }
        }
      }
    }
    return progressed;
  }

  struct BetaPick { int w = -1, item = -1; };
  BetaPick find_branching_beta(const TState& st) const {
    for (int w = 0; w < static_cast<int>(st.worlds.size()); ++w) {
      const World& world = st.worlds[w];
      if (!world.alive) continue;
      for (std::size_t word = 0; word < world.pos.w.size(); ++word) {
        std::uint64_t bits = world.pos.w[word] & or_mask_.w[word] & ~world.beta_done.w[word];
        if (bits) return {w, static_cast<int>(word * 64 + std::countr_zero(bits))};
      }
    }
    return {};
  }

  struct DiamondPick { int w = -1, item = -1; };
  DiamondPick find_diamond(const TState& st) const {
    for (int w = 0; w < static_cast<int>(st.worlds.size()); ++w) {
      const World& world = st.worlds[w];
      if (!world.alive) continue;
      for (std::size_t word = 0; word < world.neg.w.size(); ++word) {
        std::uint64_t bits = world.neg.w[word] & box_mask_.w[word];
        while (bits) {
          int i = static_cast<int>(word * 64 + std::countr_zero(bits));
          bits &= bits - 1;
          auto [c, csign] = closure_.norm(closure_.info[i].a, true);
          bool fulfilled = false;
          for (int v : world.nbrs) {
            if (st.worlds[v].alive && present(st, v, c, !csign)) {
              fulfilled = true;
              break;
            }
          }
          if (!fulfilled) return {w, i};
        }
      }
    }
    return {};
  }

  int find_blocking_ancestor(const TState& st, int w) const {
    const World& world = st.worlds[w];
    for (int a = world.parent; a >= 0; a = st.worlds[a].parent) {
      if (!st.worlds[a].alive) continue;
      if (st.worlds[a].pos == world.pos && st.worlds[a].neg == world.neg) return a;
    }
    return -1;
  }

  int find_lonely_world(const TState& st) const {
    for (int w = 0; w < static_cast<int>(st.worlds.size()); ++w) {
      const World& world = st.worlds[w];
      if (!world.alive) continue;
      bool has_nbr = false;
      for (int v : world.nbrs) {
        if (st.worlds[v].alive) { has_nbr = true; break; }
      }
      if (!has_nbr) return w;
    }
    return -1;
  }

  bool budget_spent() { return ++nodes_ > cfg_.max_nodes; }

  Res saturate(TState& st) {
    for (;;) {
      if (st.clash) return Res::Unsat;
      if (deterministic_wave(st)) continue;
      if (st.clash) return Res::Unsat;

      BetaPick beta = find_branching_beta(st);
      if (beta.w >= 0) {
        if (budget_spent()) return Res::Budget;
        st.worlds[beta.w].beta_done.set(beta.item);
        const auto& in = closure_.info[beta.item];
        TState copy = st;
        add(copy, beta.w, in.a, true);
        Res r = saturate(copy);
        if (r != Res::Unsat) {
          st = std::move(copy);
          return r;
        }
        add(st, beta.w, in.b, true);
        continue;
      }

      DiamondPick dia = find_diamond(st);
      if (dia.w >= 0) {
        if (!st.worlds[dia.w].expanded) {
          int anc = find_blocking_ancestor(st, dia.w);
          if (anc >= 0) {
            if (budget_spent()) return Res::Budget;
            TState copy = st;
            merge(copy, dia.w, anc);
            Res r = saturate(copy);
            if (r != Res::Unsat) {
              st = std::move(copy);
              return r;
            }
            // Merged branch closed; expand this world normally instead.
          }
        }
        if (budget_spent()) return Res::Budget;
        st.worlds[dia.w].expanded = true;
        int child = new_world(st, dia.w);
        st.worlds[dia.w].nbrs.push_back(child);
        st.worlds[child].nbrs.push_back(dia.w);
        add(st, child, closure_.info[dia.item].a, false);
        if (!st.clash) add_unboxings(st, dia.w, child);
        continue;
      }

      if (logic_ == Logic::KDB) {
        int lonely = find_lonely_world(st);
        if (lonely >= 0) {
          if (budget_spent()) return Res::Budget;
          st.worlds[lonely].expanded = true;
          int child = new_world(st, lonely);
          st.worlds[lonely].nbrs.push_back(child);
          st.worlds[child].nbrs.push_back(lonely);
          add_unboxings(st, lonely, child);
          continue;
        }
      }

      return Res::Sat;
    }
  }

 public:
  PointedModel extract(const TState& st) const {
    std::vector<int> remap(st.worlds.size(), -1);
    int next = 0;
    for (int w = 0; w < static_cast<int>(st.worlds.size()); ++w) {
      if (st.worlds[w].alive) remap[w] = next++;
    }
    PointedModel pm;
    for (int i = 0; i < next; ++i) pm.model.frame.states.push_back(i);
    for (int w = 0; w < static_cast<int>(st.worlds.size()); ++w) {
      if (!st.worlds[w].alive) continue;
      for (int v : st.worlds[w].nbrs) {
        if (st.worlds[v].alive) pm.model.frame.rel.emplace_back(remap[w], remap[v]);
      }
    }
    std::sort(pm.model.frame.rel.begin(), pm.model.frame.rel.end());
    pm.model.frame.rel.erase(
        std::unique(pm.model.frame.rel.begin(), pm.model.frame.rel.end()),
        pm.model.frame.rel.end());
    for (int item : closure_.atom_items) {
      std::vector<State> states;
      for (int w = 0; w < static_cast<int>(st.worlds.size()); ++w) {
        if (st.worlds[w].alive && st.worlds[w].pos.get(item)) states.push_back(remap[w]);
      }
      if (!states.empty()) pm.model.valuation[closure_.items[item].atom_ref()] = std::move(states);
    }
    pm.point = remap[0];
    return pm;
  }

  void prepare_masks() {
    or_mask_ = Bits(n_);
    box_mask_ = Bits(n_);
    for (int i = 0; i < static_cast<int>(n_); ++i) {
      if (closure_.info[i].op == Formula::Kind::Or) or_mask_.set(i);
      if (closure_.info[i].op == Formula::Kind::Box) box_mask_.set(i);
    }
  }

 private:
  Logic logic_;
  ProverConfig cfg_;
  Closure closure_;
  int root_item_ = -1;
  std::size_t n_ = 0;
  Bits or_mask_, box_mask_;
  std::int64_t nodes_ = 0;
};

}  // namespace

Verdict decide(Logic l, const Formula& f, const ProverConfig& config) {
  Formula goal_negation = Formula::neg(f);
  Tableau tableau(l, config, goal_negation);
  tableau.prepare_masks();
  TState st;
  Tableau::Res res = tableau.run(st);
  switch (res) {
    case Tableau::Res::Unsat:
      return Verdict::valid();
    case Tableau::Res::Budget:
      return Verdict::unknown("tableau node budget of " + std::to_string(config.max_nodes) +
                              " exhausted");
    case Tableau::Res::Sat:
      break;
  }
  PointedModel pm = tableau.extract(st);
  pm.validate();
  if (!frame_in_class(l, pm.model.frame)) {
    throw std::logic_error("tableau produced a countermodel outside the frame class");
  }
  if (satisfies(pm.model, pm.point, f)) {
    throw std::logic_error("tableau produced a countermodel that fails certification");
  }
  return Verdict::invalid(std::move(pm));
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

namespace {

constexpr int kOracleStateLimit = 16;

}  // namespace

OracleOutcome brute_force_countermodel(Logic l, const Formula& f, int max_states,
                                       std::int64_t max_candidates) {
  if (max_states < 1) throw std::invalid_argument("max_states must be at least 1");
  if (max_states > kOracleStateLimit) {
    throw std::invalid_argument("oracle supports at most " +
                                std::to_string(kOracleStateLimit) + " states");
  }

  Closure cl;
  int root = cl.add(f);
  const std::set<Atom> atom_set = f.atoms();
  std::vector<Atom> atoms(atom_set.begin(), atom_set.end());
  const int na = static_cast<int>(atoms.size());

  OracleOutcome out;
  std::vector<std::uint32_t> tv(cl.items.size(), 0);

  for (int n = 1; n <= max_states; ++n) {
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    // Unordered state pairs; the diagonal is forced for KTB.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        if (l == Logic::KTB && i == j) continue;
        pairs.emplace_back(i, j);
      }
    }
    if (pairs.size() > 30 || static_cast<std::size_t>(na) * n > 30) {
      out.kind = OracleOutcome::Kind::BudgetExceeded;
      return out;
    }
    const std::uint64_t rel_count = std::uint64_t{1} << pairs.size();
    const std::uint64_t val_count = std::uint64_t{1} << (na * n);

    std::vector<std::uint32_t> succ(n, 0);
    for (std::uint64_t relbits = 0; relbits < rel_count; ++relbits) {
      std::fill(succ.begin(), succ.end(), 0u);
      if (l == Logic::KTB) {
        for (int s = 0; s < n; ++s) succ[s] |= (1u << s);
      }
      for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        if (relbits & (std::uint64_t{1} << pi)) {
          auto [i, j] = pairs[pi];
          succ[i] |= (1u << j);
          succ[j] |= (1u << i);
        }
      }
      if (l == Logic::KDB) {
        bool serial = true;
        for (int s = 0; s < n; ++s) {
          if (succ[s] == 0) { serial = false; break; }
        }
        if (!serial) continue;
      }

      for (std::uint64_t valbits = 0; valbits < val_count; ++valbits) {
        if (out.candidates_checked >= max_candidates) {
          out.kind = OracleOutcome::Kind::BudgetExceeded;
          return out;
        }
        ++out.candidates_checked;

        for (std::size_t i = 0; i < cl.items.size(); ++i) {
          const auto& in = cl.info[i];
          switch (in.op) {
            case Formula::Kind::Bot:
              tv[i] = 0;
              break;
            case Formula::Kind::Atom: {
              int ai = static_cast<int>(
                  std::lower_bound(atoms.begin(), atoms.end(), cl.items[i].atom_ref()) -
                  atoms.begin());
              tv[i] = static_cast<std::uint32_t>((valbits >> (ai * n)) & full);
              break;
            }
            case Formula::Kind::Neg:
              tv[i] = ~tv[in.a] & full;
              break;
            case Formula::Kind::Or:
              tv[i] = tv[in.a] | tv[in.b];
              break;
            case Formula::Kind::Box: {
              std::uint32_t v = 0;
              for (int s = 0; s < n; ++s) {
                if ((tv[in.a] & succ[s]) == succ[s]) v |= (1u << s);
              }
              tv[i] = v;
              break;
            }
          }
        }
        std::uint32_t truth = tv[root];
        if (truth == full) continue;
        int point = std::countr_zero(~truth & full);

        PointedModel pm;
        for (int s = 0; s < n; ++s) pm.model.frame.states.push_back(s);
        for (int s = 0; s < n; ++s) {
          for (int t = 0; t < n; ++t) {
            if (succ[s] & (1u << t)) pm.model.frame.rel.emplace_back(s, t);
          }
        }
        for (int ai = 0; ai < na; ++ai) {
          std::uint32_t bits = static_cast<std::uint32_t>((valbits >> (ai * n)) & full);
          std::vector<State> states;
          for (int s = 0; s < n; ++s) {
            if (bits & (1u << s)) states.push_back(s);
          }
          if (!states.empty()) pm.model.valuation[atoms[ai]] = std::move(states);
        }
        pm.point = point;
        out.kind = OracleOutcome::Kind::Found;
        out.model = std::move(pm);
        return out;
      }
    }
  }
  out.kind = OracleOutcome::Kind::NoneFound;
  return out;
}

}  // namespace modal
