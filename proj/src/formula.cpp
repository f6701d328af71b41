#include "modal/formula.hpp"

#include <cassert>
#include <cctype>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace modal {

namespace {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::size_t hash_mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

Atom Atom::variable(std::string name) {
  if (!is_identifier(name)) {
    throw std::invalid_argument("invalid variable name: '" + name + "'");
  }
  if (name == "p" || name == "q") {
    throw std::invalid_argument(
        "'" + name + "' is a reserved parameter name and cannot name a variable");
  }
  return Atom(Kind::Variable, std::move(name));
}

Atom Atom::parameter(std::string name) {
  if (!is_identifier(name)) {
    throw std::invalid_argument("invalid parameter name: '" + name + "'");
  }
  return Atom(Kind::Parameter, std::move(name));
}

std::string Atom::text() const {
  return is_parameter() ? "#" + name_ : name_;
}

const Atom& param_p() {
  static const Atom p = Atom::parameter("p");
  return p;
}

const Atom& param_q() {
  static const Atom q = Atom::parameter("q");
  return q;
}

struct Formula::Node {
  Kind kind;
  std::optional<Atom> atom;  // Kind::Atom
  std::shared_ptr<const Node> lhs;  // Neg/Box child, Or left
  std::shared_ptr<const Node> rhs;  // Or right
  int degree = 0;
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

NodePtr make_node(Formula::Kind kind, std::optional<Atom> atom, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = kind;
  n->atom = std::move(atom);
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  std::size_t h = hash_mix(0x243f6a8885a308d3ULL, static_cast<std::size_t>(kind));
  switch (kind) {
    case Formula::Kind::Bot:
      n->degree = 0;
      break;
    case Formula::Kind::Atom:
      n->degree = 0;
      h = hash_mix(h, std::hash<std::string>{}(n->atom->name()));
      h = hash_mix(h, static_cast<std::size_t>(n->atom->kind()));
      break;
    case Formula::Kind::Neg:
      n->degree = n->lhs->degree;
      n->size = 1 + n->lhs->size;
      h = hash_mix(h, n->lhs->hash);
      break;
    case Formula::Kind::Or:
      n->degree = std::max(n->lhs->degree, n->rhs->degree);
      n->size = 1 + n->lhs->size + n->rhs->size;
      h = hash_mix(h, n->lhs->hash);
      h = hash_mix(h, n->rhs->hash);
      break;
    case Formula::Kind::Box:
      n->degree = n->lhs->degree + 1;
      n->size = 1 + n->lhs->size;
      h = hash_mix(h, n->lhs->hash);
      h = hash_mix(h, 0x13198a2e03707344ULL);
      break;
  }
  n->hash = h;
  return n;
}

const NodePtr& bot_node() {
  static const NodePtr n = make_node(Formula::Kind::Bot, std::nullopt, nullptr, nullptr);
  return n;
}

bool node_equal(const Formula::Node* a, const Formula::Node* b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->size != b->size) return false;
  switch (a->kind) {
    case Formula::Kind::Bot:
      return true;
    case Formula::Kind::Atom:
      return *a->atom == *b->atom;
    case Formula::Kind::Neg:
    case Formula::Kind::Box:
      return node_equal(a->lhs.get(), b->lhs.get());
    case Formula::Kind::Or:
      return node_equal(a->lhs.get(), b->lhs.get()) && node_equal(a->rhs.get(), b->rhs.get());
  }
  return false;
}

int node_compare(const Formula::Node* a, const Formula::Node* b) {
  if (a == b) return 0;
  if (a->size != b->size) return a->size < b->size ? -1 : 1;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  switch (a->kind) {
    case Formula::Kind::Bot:
      return 0;
    case Formula::Kind::Atom: {
      if (*a->atom == *b->atom) return 0;
      return *a->atom < *b->atom ? -1 : 1;
    }
    case Formula::Kind::Neg:
    case Formula::Kind::Box:
      return node_compare(a->lhs.get(), b->lhs.get());
    case Formula::Kind::Or: {
      int c = node_compare(a->lhs.get(), b->lhs.get());
      if (c != 0) return c;
      return node_compare(a->rhs.get(), b->rhs.get());
    }
  }
  return 0;
}

}  // namespace

Formula Formula::bot() { return Formula(bot_node()); }

Formula Formula::atom(Atom a) {
  return Formula(make_node(Kind::Atom, std::move(a), nullptr, nullptr));
}

Formula Formula::neg(Formula f) {
  return Formula(make_node(Kind::Neg, std::nullopt, std::move(f.node_), nullptr));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(make_node(Kind::Or, std::nullopt, std::move(lhs.node_), std::move(rhs.node_)));
}

Formula Formula::box(Formula f) {
  return Formula(make_node(Kind::Box, std::nullopt, std::move(f.node_), nullptr));
}

Formula Formula::top() { return neg(bot()); }

Formula Formula::conj(Formula lhs, Formula rhs) {
  return neg(disj(neg(std::move(lhs)), neg(std::move(rhs))));
}

Formula Formula::imp(Formula lhs, Formula rhs) {
  return disj(neg(std::move(lhs)), std::move(rhs));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return conj(imp(lhs, rhs), imp(rhs, lhs));
}

Formula Formula::diamond(Formula f) { return neg(box(neg(std::move(f)))); }

Formula Formula::variable(std::string name) { return atom(Atom::variable(std::move(name))); }

Formula Formula::parameter(std::string name) { return atom(Atom::parameter(std::move(name))); }

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::atom_ref() const {
  if (node_->kind != Kind::Atom) throw std::logic_error("atom_ref on non-atom formula");
  return *node_->atom;
}

Formula Formula::child() const {
  if (node_->kind != Kind::Neg && node_->kind != Kind::Box) {
    throw std::logic_error("child on formula without a single child");
  }
  return Formula(node_->lhs);
}

Formula Formula::left() const {
  if (node_->kind != Kind::Or) throw std::logic_error("left on non-disjunction");
  return Formula(node_->lhs);
}

Formula Formula::right() const {
  if (node_->kind != Kind::Or) throw std::logic_error("right on non-disjunction");
  return Formula(node_->rhs);
}

int Formula::degree() const { return node_->degree; }
std::size_t Formula::node_count() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

bool Formula::operator==(const Formula& other) const {
  return node_equal(node_.get(), other.node_.get());
}

int Formula::compare(const Formula& a, const Formula& b) {
  return node_compare(a.node_.get(), b.node_.get());
}

std::set<Atom> Formula::atoms() const {
  std::set<Atom> out;
  std::unordered_set<const Node*> seen;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->kind == Kind::Atom) out.insert(*n->atom);
    if (n->lhs) stack.push_back(n->lhs.get());
    if (n->rhs) stack.push_back(n->rhs.get());
  }
  return out;
}

std::set<Atom> Formula::variables() const {
  std::set<Atom> out;
  for (const Atom& a : atoms()) {
    if (a.is_variable()) out.insert(a);
  }
  return out;
}

std::set<Atom> Formula::parameters() const {
  std::set<Atom> out;
  for (const Atom& a : atoms()) {
    if (a.is_parameter()) out.insert(a);
  }
  return out;
}

namespace {

Formula guard_vv() {
  static const Formula g =
      Formula::conj(Formula::neg(Formula::atom(param_p())), Formula::neg(Formula::atom(param_q())));
  return g;
}

Formula guard_t() {
  static const Formula g =
      Formula::conj(Formula::atom(param_p()), Formula::neg(Formula::atom(param_q())));
  return g;
}

Formula guard_u() {
  static const Formula g =
      Formula::conj(Formula::neg(Formula::atom(param_p())), Formula::atom(param_q()));
  return g;
}

Formula guarded_layers(const Formula& first, const Formula& second, Formula f) {
  Formula inner = Formula::imp(guard_vv(), std::move(f));
  inner = Formula::imp(second, Formula::box(std::move(inner)));
  inner = Formula::imp(first, Formula::box(std::move(inner)));
  return Formula::imp(guard_vv(), Formula::box(std::move(inner)));
}

void check_iter_count(int k) {
  if (k < 0) throw std::invalid_argument("iteration count must be nonnegative");
  if (k > 1000) throw std::invalid_argument("iteration count too large");
}

}  // namespace

Formula boxplus(Formula f) { return guarded_layers(guard_t(), guard_u(), std::move(f)); }

Formula boxminus(Formula f) { return guarded_layers(guard_u(), guard_t(), std::move(f)); }

Formula boxplus_iter(int k, Formula f) {
  check_iter_count(k);
  for (int i = 0; i < k; ++i) f = boxplus(std::move(f));
  return f;
}

Formula boxminus_iter(int k, Formula f) {
  check_iter_count(k);
  for (int i = 0; i < k; ++i) f = boxminus(std::move(f));
  return f;
}

Formula boxplus_bounded(int k, Formula f) {
  check_iter_count(k);
  Formula out = Formula::top();
  for (int i = 0; i < k; ++i) out = Formula::conj(std::move(out), boxplus_iter(i, f));
  return out;
}

Formula boxminus_bounded(int k, Formula f) {
  check_iter_count(k);
  Formula out = Formula::top();
  for (int i = 0; i < k; ++i) out = Formula::conj(std::move(out), boxminus_iter(i, f));
  return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

enum class TokKind {
  Iff, Imp, Or, And, Neg, Box, Diamond,
  BoxPlus, BoxMinus, BoxPlusIter, BoxMinusIter, BoxPlusBounded, BoxMinusBounded,
  True, False, Ident, Param, LParen, RParen, End,
};

struct Token {
  TokKind kind;
  std::string text;  // Ident/Param name
  int count = 0;     // iterated/bounded connectives
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_ws();
      std::size_t pos = i_;
      if (i_ >= src_.size()) {
        out.push_back({TokKind::End, "", 0, pos});
        return out;
      }
      char c = src_[i_];
      if (c == '(') { ++i_; out.push_back({TokKind::LParen, "", 0, pos}); continue; }
      if (c == ')') { ++i_; out.push_back({TokKind::RParen, "", 0, pos}); continue; }
      if (c == '~') { ++i_; out.push_back({TokKind::Neg, "", 0, pos}); continue; }
      if (c == '|') { ++i_; out.push_back({TokKind::Or, "", 0, pos}); continue; }
      if (c == '&') { ++i_; out.push_back({TokKind::And, "", 0, pos}); continue; }
      if (c == '-') {
        expect('-'); expect_or_fail('>', "expected '>' after '-'");
        out.push_back({TokKind::Imp, "", 0, pos});
        continue;
      }
      if (c == '<') {
        ++i_;
        if (i_ < src_.size() && src_[i_] == '-') {
          ++i_; expect_or_fail('>', "expected '>' after '<-'");
          out.push_back({TokKind::Iff, "", 0, pos});
        } else {
          expect_or_fail('>', "expected '>' or '->' after '<'");
          out.push_back({TokKind::Diamond, "", 0, pos});
        }
        continue;
      }
      if (c == '[') { out.push_back(lex_bracket(pos)); continue; }
      if (c == '#') {
        ++i_;
        std::string name = lex_ident_or_fail("expected parameter name after '#'");
        out.push_back({TokKind::Param, std::move(name), 0, pos});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = lex_ident_or_fail("expected identifier");
        if (name == "true") out.push_back({TokKind::True, "", 0, pos});
        else if (name == "false") out.push_back({TokKind::False, "", 0, pos});
        else out.push_back({TokKind::Ident, std::move(name), 0, pos});
        continue;
      }
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
  }

 private:
  void skip_ws() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
  }
  void expect([[maybe_unused]] char c) {
    assert(i_ < src_.size() && src_[i_] == c);
    ++i_;
  }
  void expect_or_fail(char c, const char* msg) {
    if (i_ >= src_.size() || src_[i_] != c) throw ParseError(msg, i_);
    ++i_;
  }
  std::string lex_ident_or_fail(const char* msg) {
    std::size_t start = i_;
    while (i_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_')) {
      ++i_;
    }
    if (i_ == start) throw ParseError(msg, start);
    return std::string(src_.substr(start, i_ - start));
  }
  int lex_nat() {
    std::size_t start = i_;
    long v = 0;
    while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
      v = v * 10 + (src_[i_] - '0');
      if (v > 1000) throw ParseError("iteration count too large", start);
      ++i_;
    }
    if (i_ == start) throw ParseError("expected a number", start);
    return static_cast<int>(v);
  }
  Token lex_bracket(std::size_t pos) {
    expect('[');
    if (i_ < src_.size() && src_[i_] == ']') { ++i_; return {TokKind::Box, "", 0, pos}; }
    if (i_ >= src_.size() || (src_[i_] != '+' && src_[i_] != '-')) {
      throw ParseError("expected ']', '+' or '-' after '['", i_);
    }
    bool plus = src_[i_] == '+';
    ++i_;
    if (i_ < src_.size() && src_[i_] == ']') {
      ++i_;
      return {plus ? TokKind::BoxPlus : TokKind::BoxMinus, "", 0, pos};
    }
    if (i_ < src_.size() && src_[i_] == '^') {
      ++i_;
      int k = lex_nat();
      expect_or_fail(']', "expected ']' after iteration count");
      return {plus ? TokKind::BoxPlusIter : TokKind::BoxMinusIter, "", k, pos};
    }
    if (i_ < src_.size() && src_[i_] == '<') {
      ++i_;
      int k = lex_nat();
      expect_or_fail(']', "expected ']' after bound");
      return {plus ? TokKind::BoxPlusBounded : TokKind::BoxMinusBounded, "", k, pos};
    }
    throw ParseError("expected ']', '^' or '<' in bracket connective", i_);
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula run() {
    Formula f = parse_iff();
    if (peek().kind != TokKind::End) throw ParseError("unexpected trailing input", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  bool accept(TokKind k) {
    if (peek().kind == k) { ++i_; return true; }
    return false;
  }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    if (accept(TokKind::Iff)) return Formula::iff(std::move(lhs), parse_iff());
    return lhs;
  }
  Formula parse_imp() {
    Formula lhs = parse_or();
    if (accept(TokKind::Imp)) return Formula::imp(std::move(lhs), parse_imp());
    return lhs;
  }
  Formula parse_or() {
    Formula f = parse_and();
    while (accept(TokKind::Or)) f = Formula::disj(std::move(f), parse_and());
    return f;
  }
  Formula parse_and() {
    Formula f = parse_prefix();
    while (accept(TokKind::And)) f = Formula::conj(std::move(f), parse_prefix());
    return f;
  }
  Formula parse_prefix() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Neg: ++i_; return Formula::neg(parse_prefix());
      case TokKind::Box: ++i_; return Formula::box(parse_prefix());
      case TokKind::Diamond: ++i_; return Formula::diamond(parse_prefix());
      case TokKind::BoxPlus: ++i_; return boxplus(parse_prefix());
      case TokKind::BoxMinus: ++i_; return boxminus(parse_prefix());
      case TokKind::BoxPlusIter: { int k = take().count; return boxplus_iter(k, parse_prefix()); }
      case TokKind::BoxMinusIter: { int k = take().count; return boxminus_iter(k, parse_prefix()); }
      case TokKind::BoxPlusBounded: { int k = take().count; return boxplus_bounded(k, parse_prefix()); }
      case TokKind::BoxMinusBounded: { int k = take().count; return boxminus_bounded(k, parse_prefix()); }
      default: return parse_primary();
    }
  }
  Formula parse_primary() {
    Token t = take();
    switch (t.kind) {
      case TokKind::True: return Formula::top();
      case TokKind::False: return Formula::bot();
      case TokKind::Ident:
        try {
          return Formula::variable(t.text);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), t.pos);
        }
      case TokKind::Param:
        try {
          return Formula::parameter(t.text);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), t.pos);
        }
      case TokKind::LParen: {
        Formula f = parse_iff();
        if (!accept(TokKind::RParen)) throw ParseError("expected ')'", peek().pos);
        return f;
      }
      case TokKind::End: throw ParseError("unexpected end of input", t.pos);
      default: throw ParseError("expected a formula", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Formula parse(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

using Node = Formula::Node;

// Sugar recognition over the core tree.  Patterns are checked from the most
// specific down so the canonical expansion of each derived connective prints
// back as that connective.
struct Sugar {
  enum class Op { Bot, Top, Atom, Neg, Or, And, Imp, Iff, Box, Diamond };
  Op op;
  const Node* a = nullptr;
  const Node* b = nullptr;
};

Sugar classify(const Node* n) {
  switch (n->kind) {
    case Formula::Kind::Bot:
      return {Sugar::Op::Bot};
    case Formula::Kind::Atom:
      return {Sugar::Op::Atom, n};
    case Formula::Kind::Box:
      return {Sugar::Op::Box, n->lhs.get()};
    case Formula::Kind::Or: {
      const Node* l = n->lhs.get();
      if (l->kind == Formula::Kind::Neg) return {Sugar::Op::Imp, l->lhs.get(), n->rhs.get()};
      return {Sugar::Op::Or, l, n->rhs.get()};
    }
    case Formula::Kind::Neg: {
      const Node* c = n->lhs.get();
      if (c->kind == Formula::Kind::Bot) return {Sugar::Op::Top};
      if (c->kind == Formula::Kind::Or && c->lhs->kind == Formula::Kind::Neg &&
          c->rhs->kind == Formula::Kind::Neg) {
        const Node* x = c->lhs->lhs.get();
        const Node* y = c->rhs->lhs.get();
        // (a -> b) & (b -> a) prints as a <-> b.
        if (x->kind == Formula::Kind::Or && x->lhs->kind == Formula::Kind::Neg &&
            y->kind == Formula::Kind::Or && y->lhs->kind == Formula::Kind::Neg &&
            node_equal(x->lhs->lhs.get(), y->rhs.get()) &&
            node_equal(x->rhs.get(), y->lhs->lhs.get())) {
          return {Sugar::Op::Iff, x->lhs->lhs.get(), x->rhs.get()};
        }
        return {Sugar::Op::And, x, y};
      }
      if (c->kind == Formula::Kind::Box && c->lhs->kind == Formula::Kind::Neg) {
        return {Sugar::Op::Diamond, c->lhs->lhs.get()};
      }
      return {Sugar::Op::Neg, c};
    }
  }
  return {Sugar::Op::Bot};
}

constexpr int kPrecIff = 1;
constexpr int kPrecImp = 2;
constexpr int kPrecOr = 3;
constexpr int kPrecAnd = 4;
constexpr int kPrecPrefix = 5;
constexpr int kPrecAtomic = 6;

void print_rec(const Node* n, int min_prec, std::string& out) {
  Sugar s = classify(n);
  int prec = kPrecAtomic;
  switch (s.op) {
    case Sugar::Op::Iff: prec = kPrecIff; break;
    case Sugar::Op::Imp: prec = kPrecImp; break;
    case Sugar::Op::Or: prec = kPrecOr; break;
    case Sugar::Op::And: prec = kPrecAnd; break;
    case Sugar::Op::Neg:
    case Sugar::Op::Box:
    case Sugar::Op::Diamond: prec = kPrecPrefix; break;
    default: break;
  }
  bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (s.op) {
    case Sugar::Op::Bot: out += "false"; break;
    case Sugar::Op::Top: out += "true"; break;
    case Sugar::Op::Atom: out += s.a->atom->text(); break;
    case Sugar::Op::Neg:
      out += '~';
      print_rec(s.a, kPrecPrefix, out);
      break;
    case Sugar::Op::Box:
      out += "[] ";
      print_rec(s.a, kPrecPrefix, out);
      break;
    case Sugar::Op::Diamond:
      out += "<> ";
      print_rec(s.a, kPrecPrefix, out);
      break;
    case Sugar::Op::Or:
      print_rec(s.a, kPrecOr, out);
      out += " | ";
      print_rec(s.b, kPrecOr + 1, out);
      break;
    case Sugar::Op::And:
      print_rec(s.a, kPrecAnd, out);
      out += " & ";
      print_rec(s.b, kPrecAnd + 1, out);
      break;
    case Sugar::Op::Imp:
      print_rec(s.a, kPrecImp + 1, out);
      out += " -> ";
      print_rec(s.b, kPrecImp, out);
      break;
    case Sugar::Op::Iff:
      print_rec(s.a, kPrecIff + 1, out);
      out += " <-> ";
      print_rec(s.b, kPrecIff, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_rec(f.raw(), 0, out);
  return out;
}

}  // namespace modal
