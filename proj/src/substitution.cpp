#include "modal/substitution.hpp"

#include <set>
#include <unordered_map>

namespace modal {

std::string_view to_string(Ternary t) {
  switch (t) {
    case Ternary::False: return "false";
    case Ternary::True: return "true";
    case Ternary::Unknown: return "unknown";
  }
  return "?";
}

Substitution::Substitution(std::initializer_list<std::pair<Atom, Formula>> entries) {
  for (const auto& [var, image] : entries) set(var, image);
}

void Substitution::set(const Atom& var, Formula image) {
  if (!var.is_variable()) {
    throw std::invalid_argument("substitutions may only move variables, not " + var.text());
  }
  if (image.kind() == Formula::Kind::Atom && image.atom_ref() == var) {
    map_.erase(var);  // identity entries are not stored
    return;
  }
  map_.insert_or_assign(var, std::move(image));
}

Formula Substitution::image(const Atom& var) const {
  auto it = map_.find(var);
  if (it != map_.end()) return it->second;
  return Formula::atom(var);
}

Formula Substitution::apply(const Formula& f) const {
  if (map_.empty()) return f;
  std::unordered_map<const Formula::Node*, Formula> memo;
  // Rebuilds only along paths that actually change, so shared structure stays
  // shared and untouched subtrees are returned as-is.
  auto rec = [&](auto&& self, const Formula& g) -> Formula {
    auto it = memo.find(g.raw());
    if (it != memo.end()) return it->second;
    Formula out = g;
    switch (g.kind()) {
      case Formula::Kind::Bot:
        break;
      case Formula::Kind::Atom: {
        const Atom& a = g.atom_ref();
        if (a.is_variable()) {
          auto img = map_.find(a);
          if (img != map_.end()) out = img->second;
        }
        break;
      }
      case Formula::Kind::Neg: {
        Formula c = self(self, g.child());
        if (c.raw() != g.child().raw()) out = Formula::neg(std::move(c));
        break;
      }
      case Formula::Kind::Or: {
        Formula l = self(self, g.left());
        Formula r = self(self, g.right());
        if (l.raw() != g.left().raw() || r.raw() != g.right().raw()) {
          out = Formula::disj(std::move(l), std::move(r));
        }
        break;
      }
      case Formula::Kind::Box: {
        Formula c = self(self, g.child());
        if (c.raw() != g.child().raw()) out = Formula::box(std::move(c));
        break;
      }
    }
    memo.emplace(g.raw(), out);
    return out;
  };
  return rec(rec, f);
}

nlohmann::ordered_json Substitution::to_json() const {
  nlohmann::ordered_json map = nlohmann::ordered_json::object();
  for (const auto& [var, image] : map_) {
    map[var.name()] = print(image);
  }
  nlohmann::ordered_json j;
  j["map"] = std::move(map);
  return j;
}

Substitution Substitution::from_json(const nlohmann::json& j) {
  Substitution s;
  for (const auto& [name, text] : j.at("map").items()) {
    s.set(Atom::variable(name), parse(text.get<std::string>()));
  }
  return s;
}

Substitution compose(const Substitution& s, const Substitution& t) {
  Substitution out;
  for (const auto& [var, image] : s.support()) {
    out.set(var, t.apply(image));
  }
  for (const auto& [var, image] : t.support()) {
    if (!s.support().contains(var)) out.set(var, image);
  }
  return out;
}

Substitution restrict_to(const Substitution& s, const Formula& f) {
  Substitution out;
  std::set<Atom> vars = f.variables();
  for (const auto& [var, image] : s.support()) {
    if (vars.contains(var)) out.set(var, image);
  }
  return out;
}

Ternary equivalent(Logic l, const Substitution& s, const Substitution& t,
                   const ProverConfig& config) {
  std::set<Atom> vars;
  for (const auto& [var, image] : s.support()) vars.insert(var);
  for (const auto& [var, image] : t.support()) vars.insert(var);
  bool unknown = false;
  for (const Atom& var : vars) {
    Verdict v = decide(l, Formula::iff(s.image(var), t.image(var)), config);
    if (v.is_invalid()) return Ternary::False;
    if (v.is_unknown()) unknown = true;
  }
  return unknown ? Ternary::Unknown : Ternary::True;
}

Ternary more_general_with_witness(Logic l, const Substitution& s, const Substitution& t,
                                  const Substitution& w, const ProverConfig& config) {
  return equivalent(l, compose(s, w), t, config);
}

Ternary is_unifier(Logic l, const Substitution& s, const Formula& f,
                   const ProverConfig& config) {
  Verdict v = decide(l, s.apply(f), config);
  switch (v.kind()) {
    case Verdict::Kind::Valid: return Ternary::True;
    case Verdict::Kind::Invalid: return Ternary::False;
    case Verdict::Kind::Unknown: return Ternary::Unknown;
  }
  return Ternary::Unknown;
}

}  // namespace modal
