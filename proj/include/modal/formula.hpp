#ifndef MODAL_FORMULA_HPP_
#define MODAL_FORMULA_HPP_

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace modal {

// An atom is a propositional variable or a propositional parameter.
// Substitutions may replace variables; parameters are constants of the
// unification problem.  The names "p" and "q" are reserved for the two
// distinguished parameters and can never name a variable.
class Atom {
 public:
  enum class Kind { Variable, Parameter };

  static Atom variable(std::string name);
  static Atom parameter(std::string name);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  bool is_parameter() const { return kind_ == Kind::Parameter; }

  // Concrete syntax: parameters carry a '#' sigil, variables are bare.
  std::string text() const;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.kind_ == b.kind_ && a.name_ == b.name_;
  }
  friend bool operator<(const Atom& a, const Atom& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.name_ < b.name_;
  }

 private:
  Atom(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}
  Kind kind_;
  std::string name_;
};

// The two reserved parameters used by the guarded box connectives.
const Atom& param_p();
const Atom& param_q();

// Immutable modal formula over the core connectives {false, atom, ~, |, []}.
// Derived connectives (true, &, ->, <->, <>) expand into the core at
// construction time; the printer re-sugars them.  Nodes are shared, so
// copies are cheap and iterated connectives stay linear in memory.
class Formula {
 public:
  enum class Kind { Bot, Atom, Neg, Or, Box };

  // Core constructors.
  static Formula bot();
  static Formula atom(Atom a);
  static Formula neg(Formula f);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula box(Formula f);

  // Derived connectives, canonically expanded.
  static Formula top();                        // ~false
  static Formula conj(Formula lhs, Formula rhs);  // ~(~a | ~b)
  static Formula imp(Formula lhs, Formula rhs);   // ~a | b
  static Formula iff(Formula lhs, Formula rhs);   // (a -> b) & (b -> a)
  static Formula diamond(Formula f);              // ~[]~a

  static Formula variable(std::string name);
  static Formula parameter(std::string name);

  Kind kind() const;
  const Atom& atom_ref() const;  // Kind::Atom only
  Formula child() const;         // Neg / Box
  Formula left() const;          // Or
  Formula right() const;         // Or

  // Modal degree: atoms and false have degree 0, ~ preserves, | takes the
  // maximum, [] adds one.
  int degree() const;
  std::size_t node_count() const;
  std::size_t hash() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  // Deterministic structural total order; consistent with operator==.
  static int compare(const Formula& a, const Formula& b);
  bool operator<(const Formula& other) const { return compare(*this, other) < 0; }

  std::set<Atom> atoms() const;
  std::set<Atom> variables() const;
  std::set<Atom> parameters() const;

  struct Node;
  const Node* raw() const { return node_.get(); }

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHasher {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Guarded box connectives over the reserved parameters.  boxplus(f) is the
// three-layer implication whose antecedent pattern walks the labels
// (~p&~q), (p&~q), (~p&q), (~p&~q); boxminus swaps the two middle layers.
Formula boxplus(Formula f);
Formula boxminus(Formula f);
Formula boxplus_iter(int k, Formula f);
Formula boxminus_iter(int k, Formula f);
Formula boxplus_bounded(int k, Formula f);
Formula boxminus_bounded(int k, Formula f);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (lowest to highest precedence, '->' and '<->' right-associative,
// '|' and '&' left-associative):
//   phi ::= phi "<->" phi | phi "->" phi | phi "|" phi | phi "&" phi
//         | "~" phi | "[]" phi | "<>" phi
//         | "[+]" phi | "[-]" phi | "[+^" nat "]" phi | "[-^" nat "]" phi
//         | "[+<" nat "]" phi | "[-<" nat "]" phi
//         | "true" | "false" | ident | "#" ident | "(" phi ")"
Formula parse(std::string_view text);

// Canonical text with minimal parentheses; parse(print(f)) == f.
std::string print(const Formula& f);

}  // namespace modal

#endif  // MODAL_FORMULA_HPP_
