#include "ceplab/term.hpp"

#include <algorithm>
#include <cctype>

#include "ceplab/errors.hpp"
#include "ops.hpp"

namespace ceplab {

// ------------------------------------------------------------------ builders

Term Term::zero() { return Term(Kind::zero, {}, {}); }
Term Term::var(std::string name) { return Term(Kind::var, std::move(name), {}); }
Term Term::neg(Term t) { return Term(Kind::neg, {}, {std::move(t)}); }
Term Term::meet(Term a, Term b) { return Term(Kind::meet, {}, {std::move(a), std::move(b)}); }
Term Term::fapp(Term t) { return Term(Kind::fapp, {}, {std::move(t)}); }

Term Term::one() { return neg(zero()); }
Term Term::join(Term a, Term b) { return neg(meet(neg(std::move(a)), neg(std::move(b)))); }
Term Term::arrow(Term a, Term b) { return neg(meet(std::move(a), neg(std::move(b)))); }
Term Term::bicond(Term a, Term b) { return meet(arrow(a, b), arrow(b, a)); }

Term Term::fpow(unsigned k, Term t) {
  for (unsigned i = 0; i < k; ++i) t = fapp(std::move(t));
  return t;
}

std::size_t Term::size() const noexcept {
  std::size_t n = 1;
  for (Term const& c : children_) n += c.size();
  return n;
}

namespace {

void collect(Term const& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::var) out.insert(t.name());
  for (Term const& c : t.children()) collect(c, out);
}

}  // namespace

std::set<std::string> free_variables(Term const& t) {
  std::set<std::string> out;
  collect(t, out);
  return out;
}

std::set<std::string> free_variables(Identity const& e) {
  std::set<std::string> out;
  collect(e.lhs, out);
  collect(e.rhs, out);
  return out;
}

std::set<std::string> free_variables(Clause const& c) {
  std::set<std::string> out;
  for (Identity const& e : c.disjuncts) {
    collect(e.lhs, out);
    collect(e.rhs, out);
  }
  return out;
}

std::string to_string(Term const& t) {
  switch (t.kind()) {
    case Term::Kind::zero: return "0";
    case Term::Kind::var: return t.name();
    case Term::Kind::neg:
      if (t.child().kind() == Term::Kind::zero) return "1";
      return "-" + to_string(t.child());
    case Term::Kind::meet: return "(" + to_string(t.child(0)) + " & " + to_string(t.child(1)) + ")";
    case Term::Kind::fapp: return "f(" + to_string(t.child()) + ")";
  }
  return "?";
}

std::string to_string(Identity const& e) { return to_string(e.lhs) + " = " + to_string(e.rhs); }

std::string to_string(Clause const& c) {
  std::string out;
  for (std::size_t i = 0; i < c.disjuncts.size(); ++i) {
    if (i) out += "  OR  ";
    out += to_string(c.disjuncts[i]);
  }
  return out;
}

Term nbar(unsigned n) {
  Term result = Term::fapp(Term::zero());
  if (n == 0) return result;
  std::vector<Term> bars{result};
  for (unsigned k = 1; k <= n; ++k) {
    Term acc = Term::neg(bars[0]);
    for (unsigned m = 1; m < k; ++m) acc = Term::meet(std::move(acc), Term::neg(bars[m]));
    bars.push_back(Term::meet(std::move(acc), Term::fpow(k + 1, Term::zero())));
  }
  return bars.back();
}

// ------------------------------------------------------------------- parsing

namespace {

constexpr unsigned kNbarCap = 16;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(std::string const& what) const { throw SyntaxError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  bool eat(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  bool ident_start() {
    skip_ws();
    return pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
  }

  std::string ident() {
    skip_ws();
    std::size_t const start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  unsigned number() {
    if (!digit()) fail("expected a number");
    unsigned value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > 1000000) fail("number too large");
      ++pos_;
    }
    return value;
  }

  std::size_t pos() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_operation_symbol(std::string_view name) { return name == "f" || name == "g" || name == "h"; }

class TermParser {
 public:
  explicit TermParser(Cursor& c) : c_(c) {}

  Term bicond() {
    Term t = arrow();
    while (c_.eat("<->")) t = Term::bicond(std::move(t), arrow());
    return t;
  }

 private:
  Term arrow() {
    Term t = join();
    if (c_.eat("->")) return Term::arrow(std::move(t), arrow());
    return t;
  }

  Term join() {
    Term t = meet();
    while (c_.eat("|")) t = Term::join(std::move(t), meet());
    return t;
  }

  Term meet() {
    Term t = unary();
    while (c_.eat("&")) t = Term::meet(std::move(t), unary());
    return t;
  }

  Term unary() {
    if (c_.peek("->")) c_.fail("expected a term");
    if (c_.eat("-")) return Term::neg(unary());
    return primary();
  }

  Term primary() {
    if (c_.at_end()) c_.fail("expected a term");
    if (c_.digit()) {
      std::size_t const at = c_.pos();
      unsigned const v = c_.number();
      if (v == 0) return Term::zero();
      if (v == 1) return Term::one();
      c_.rewind(at);
      c_.fail("only the constants 0 and 1 are allowed");
    }
    if (c_.eat("(")) {
      Term t = bicond();
      c_.expect(")");
      return t;
    }
    if (!c_.ident_start()) c_.fail("expected a term");
    std::string const name = c_.ident();
    if (is_operation_symbol(name)) {
      c_.expect("(");
      Term t = bicond();
      c_.expect(")");
      return Term::fapp(std::move(t));
    }
    if (name == "nbar") {
      std::size_t const at = c_.pos();
      unsigned const n = c_.number();
      if (n > kNbarCap) {
        c_.rewind(at);
        c_.fail("nbar argument above " + std::to_string(kNbarCap));
      }
      return nbar(n);
    }
    return Term::var(name);
  }

  Cursor& c_;
};

class ModalParser {
 public:
  explicit ModalParser(Cursor& c) : c_(c) {}

  ModalFormula bicond() {
    ModalFormula t = arrow();
    while (c_.eat("<->")) {
      ModalFormula rhs = arrow();
      t = ModalFormula::conjunction(implies(t, rhs), implies(rhs, t));
    }
    return t;
  }

 private:
  static ModalFormula implies(ModalFormula a, ModalFormula b) {
    return ModalFormula::negation(ModalFormula::conjunction(std::move(a), ModalFormula::negation(std::move(b))));
  }

  ModalFormula arrow() {
    ModalFormula t = disjunction();
    if (c_.eat("->")) return implies(std::move(t), arrow());
    return t;
  }

  ModalFormula disjunction() {
    ModalFormula t = conjunction();
    while (c_.eat("|")) {
      t = ModalFormula::negation(ModalFormula::conjunction(ModalFormula::negation(std::move(t)),
                                                           ModalFormula::negation(conjunction())));
    }
    return t;
  }

  ModalFormula conjunction() {
    ModalFormula t = unary();
    while (c_.eat("&")) t = ModalFormula::conjunction(std::move(t), unary());
    return t;
  }

  ModalFormula unary() {
    if (c_.eat("~")) return ModalFormula::negation(unary());
    if (c_.eat("<>")) return ModalFormula::diamond(unary());
    if (c_.eat("[]")) return ModalFormula::negation(ModalFormula::diamond(ModalFormula::negation(unary())));
    return primary();
  }

  ModalFormula primary() {
    if (c_.at_end()) c_.fail("expected a formula");
    if (c_.eat("(")) {
      ModalFormula t = bicond();
      c_.expect(")");
      return t;
    }
    if (!c_.ident_start()) c_.fail("expected a formula");
    std::string const name = c_.ident();
    if (name == "bot") return ModalFormula::bot();
    if (name == "top") return ModalFormula::negation(ModalFormula::bot());
    return ModalFormula::letter(name);
  }

  Cursor& c_;
};

}  // namespace

Term parse_term(std::string_view text) {
  Cursor c(text);
  Term t = TermParser(c).bicond();
  if (!c.at_end()) c.fail("unexpected input");
  return t;
}

Identity parse_identity(std::string_view text) {
  Cursor c(text);
  TermParser p(c);
  Term lhs = p.bicond();
  c.expect("=");
  Term rhs = p.bicond();
  if (!c.at_end()) c.fail("unexpected input");
  return {std::move(lhs), std::move(rhs)};
}

// ---------------------------------------------------------------- evaluation

namespace {

template <class Ops, class Lookup>
typename Ops::value_type eval_with(Ops const& ops, Term const& t, Lookup const& lookup) {
  switch (t.kind()) {
    case Term::Kind::zero: return ops.zero();
    case Term::Kind::var: return lookup(t.name());
    case Term::Kind::neg: return ops.neg(eval_with(ops, t.child(), lookup));
    case Term::Kind::meet: return ops.meet(eval_with(ops, t.child(0), lookup), eval_with(ops, t.child(1), lookup));
    case Term::Kind::fapp: return ops.f(eval_with(ops, t.child(), lookup));
  }
  throw UsageError("malformed term");
}

template <class V>
auto map_lookup(std::map<std::string, V> const& assignment) {
  return [&assignment](std::string const& name) -> V const& {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw UsageError("unbound variable '" + name + "'");
    return it->second;
  };
}

}  // namespace

Element eval_term(FiniteFrame const& frame, Term const& t, std::map<std::string, Element> const& assignment) {
  for (auto const& [name, value] : assignment) {
    if (!frame.algebra().contains(value)) throw UsageError("value of '" + name + "' is outside the carrier");
  }
  return eval_with(detail::FiniteOps{frame}, t, map_lookup(assignment));
}

EPSet eval_term(SymbolicFrame const& frame, Term const& t, std::map<std::string, EPSet> const& assignment) {
  return eval_with(detail::SymbolicOps{frame}, t, map_lookup(assignment));
}

Value eval_term(Frame const& frame, Term const& t, Assignment const& assignment) {
  if (frame.is_finite()) {
    std::map<std::string, Element> typed;
    for (auto const& [name, value] : assignment) {
      auto const* e = std::get_if<Element>(&value);
      if (e == nullptr) throw UsageError("variable '" + name + "' must be a bit pattern on a finite frame");
      typed.emplace(name, *e);
    }
    return eval_term(frame.finite(), t, typed);
  }
  std::map<std::string, EPSet> typed;
  for (auto const& [name, value] : assignment) {
    auto const* s = std::get_if<EPSet>(&value);
    if (s == nullptr) throw UsageError("variable '" + name + "' must be a set on a symbolic frame");
    typed.emplace(name, *s);
  }
  return eval_term(frame.symbolic(), t, typed);
}

CompiledTerm::CompiledTerm(Term const& t, std::vector<std::string> const& slots) {
  std::size_t depth = 0;
  auto emit = [&](auto&& self, Term const& node) -> void {
    switch (node.kind()) {
      case Term::Kind::zero:
        code_.push_back({Op::zero, 0});
        ++depth;
        break;
      case Term::Kind::var: {
        auto it = std::find(slots.begin(), slots.end(), node.name());
        if (it == slots.end()) throw UsageError("unbound variable '" + node.name() + "'");
        code_.push_back({Op::load, static_cast<std::uint32_t>(it - slots.begin())});
        ++depth;
        break;
      }
      case Term::Kind::neg:
        self(self, node.child());
        code_.push_back({Op::neg, 0});
        break;
      case Term::Kind::meet:
        self(self, node.child(0));
        self(self, node.child(1));
        code_.push_back({Op::meet, 0});
        --depth;
        break;
      case Term::Kind::fapp:
        self(self, node.child());
        code_.push_back({Op::fapp, 0});
        break;
    }
    depth_ = std::max(depth_, depth);
  };
  emit(emit, t);
}

Element CompiledTerm::eval(FiniteFrame const& frame, std::span<Element const> values) const {
  constexpr std::size_t kInline = 64;
  std::uint32_t inline_stack[kInline];
  inline_stack[0] = 0;
  std::vector<std::uint32_t> heap_stack;
  std::uint32_t* stack = inline_stack;
  if (depth_ > kInline) {
    heap_stack.resize(depth_);
    stack = heap_stack.data();
  }
  std::uint32_t const mask = frame.algebra().mask();
  std::span<Element const> const table = frame.table();
  std::size_t top = 0;
  for (Instr const& in : code_) {
    switch (in.op) {
      case Op::zero: stack[top++] = 0; break;
      case Op::load: stack[top++] = values[in.slot].bits(); break;
      case Op::neg: stack[top - 1] = ~stack[top - 1] & mask; break;
      case Op::meet:
        --top;
        stack[top - 1] &= stack[top];
        break;
      case Op::fapp: stack[top - 1] = table[stack[top - 1]].bits(); break;
    }
  }
  return Element{stack[0]};
}

// -------------------------------------------------------------- relativizing

namespace {

bool occurs(Term const& t, std::string const& y) {
  if (t.kind() == Term::Kind::var && t.name() == y) return true;
  for (Term const& c : t.children())
    if (occurs(c, y)) return true;
  return false;
}

Term relativize_unchecked(Term const& t, Term const& y) {
  switch (t.kind()) {
    case Term::Kind::zero: return Term::zero();
    case Term::Kind::var: return Term::meet(t, y);
    case Term::Kind::neg: return Term::meet(Term::neg(relativize_unchecked(t.child(), y)), y);
    case Term::Kind::meet: return Term::meet(relativize_unchecked(t.child(0), y), relativize_unchecked(t.child(1), y));
    case Term::Kind::fapp: return Term::fapp(relativize_unchecked(t.child(), y));
  }
  throw UsageError("malformed term");
}

}  // namespace

Term relativize(Term const& t, std::string const& y) {
  if (occurs(t, y)) throw UsageError("relativizing variable '" + y + "' occurs in the term");
  return relativize_unchecked(t, Term::var(y));
}

Identity relativize(Identity const& e, std::string const& y) {
  if (occurs(e.lhs, y) || occurs(e.rhs, y)) {
    throw UsageError("relativizing variable '" + y + "' occurs in the identity");
  }
  Term const v = Term::var(y);
  return {relativize_unchecked(e.lhs, v), relativize_unchecked(e.rhs, v)};
}

Term substitute(Term const& t, std::string const& var, Term const& replacement) {
  switch (t.kind()) {
    case Term::Kind::zero: return t;
    case Term::Kind::var: return t.name() == var ? replacement : t;
    case Term::Kind::neg: return Term::neg(substitute(t.child(), var, replacement));
    case Term::Kind::meet:
      return Term::meet(substitute(t.child(0), var, replacement), substitute(t.child(1), var, replacement));
    case Term::Kind::fapp: return Term::fapp(substitute(t.child(), var, replacement));
  }
  throw UsageError("malformed term");
}

Identity substitute(Identity const& e, std::string const& var, Term const& replacement) {
  return {substitute(e.lhs, var, replacement), substitute(e.rhs, var, replacement)};
}

// --------------------------------------------------------------------- modal

ModalFormula ModalFormula::bot() { return ModalFormula(Kind::bot, {}, {}); }
ModalFormula ModalFormula::letter(std::string name) { return ModalFormula(Kind::letter, std::move(name), {}); }
ModalFormula ModalFormula::negation(ModalFormula a) { return ModalFormula(Kind::negation, {}, {std::move(a)}); }
ModalFormula ModalFormula::conjunction(ModalFormula a, ModalFormula b) {
  return ModalFormula(Kind::conjunction, {}, {std::move(a), std::move(b)});
}
ModalFormula ModalFormula::diamond(ModalFormula a) { return ModalFormula(Kind::diamond, {}, {std::move(a)}); }

ModalFormula parse_modal(std::string_view text) {
  Cursor c(text);
  ModalFormula phi = ModalParser(c).bicond();
  if (!c.at_end()) c.fail("unexpected input");
  return phi;
}

std::string to_string(ModalFormula const& phi) {
  switch (phi.kind()) {
    case ModalFormula::Kind::bot: return "bot";
    case ModalFormula::Kind::letter: return phi.name();
    case ModalFormula::Kind::negation: return "~" + to_string(phi.child());
    case ModalFormula::Kind::conjunction: return "(" + to_string(phi.child(0)) + " & " + to_string(phi.child(1)) + ")";
    case ModalFormula::Kind::diamond: return "<>" + to_string(phi.child());
  }
  return "?";
}

Term iota(ModalFormula const& phi) {
  switch (phi.kind()) {
    case ModalFormula::Kind::bot: return Term::zero();
    case ModalFormula::Kind::letter: return Term::var(phi.name());
    case ModalFormula::Kind::negation: return Term::neg(iota(phi.child()));
    case ModalFormula::Kind::conjunction: return Term::meet(iota(phi.child(0)), iota(phi.child(1)));
    case ModalFormula::Kind::diamond: return Term::fapp(iota(phi.child()));
  }
  throw UsageError("malformed formula");
}

Term iota(std::string_view modal_text) { return iota(parse_modal(modal_text)); }

// ------------------------------------------------------------------- clauses

namespace {

std::string fresh_variable(std::set<std::string> const& taken) {
  if (!taken.contains("y")) return "y";
  for (unsigned i = 1;; ++i) {
    std::string candidate = "y" + std::to_string(i);
    if (!taken.contains(candidate)) return candidate;
  }
}

}  // namespace

Clause make_clause(ClauseMode mode, Identity const& e, unsigned k) {
  std::string const y = fresh_variable(free_variables(e));
  Term const vy = Term::var(y);
  Identity const rel = relativize(e, y);
  Clause c;
  if (mode == ClauseMode::phi) {
    Term const fy = Term::fapp(vy);
    Term const fny = Term::fapp(Term::neg(vy));
    c.disjuncts.push_back({fy, Term::one()});
    c.disjuncts.push_back({fny, Term::one()});
    Term conj = Term::meet(Term::meet(Term::bicond(fy, vy), Term::bicond(fny, Term::neg(vy))),
                           Term::bicond(rel.lhs, rel.rhs));
    c.disjuncts.push_back({std::move(conj), Term::one()});
  } else {
    Term const fky = Term::fpow(k, vy);
    c.disjuncts.push_back({fky, Term::one()});
    c.disjuncts.push_back({fky, Term::zero()});
    c.disjuncts.push_back(substitute(rel, y, fky));
  }
  return c;
}

namespace {

// Depth-first search over assignments; a disjunct is tested as soon as all
// of its variables are bound, and a true disjunct prunes the subtree.
class ClauseSearch {
 public:
  ClauseSearch(FiniteFrame const& frame, Clause const& c, std::map<std::string, Element> const& fixed)
      : frame_(frame) {
    std::vector<std::set<std::string>> vars;
    for (Identity const& e : c.disjuncts) vars.push_back(free_variables(e));

    std::map<std::string, std::size_t> weight;
    for (auto const& vs : vars)
      for (auto const& v : vs) {
        auto [it, inserted] = weight.emplace(v, vs.size());
        if (!inserted) it->second = std::min(it->second, vs.size());
      }
    for (auto const& [v, value] : fixed) {
      if (!frame.algebra().contains(value)) throw UsageError("value of '" + v + "' is outside the carrier");
      weight[v] = 0;
    }
    for (auto const& [v, w] : weight) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::string const& a, std::string const& b) { return weight[a] < weight[b]; });
    for (std::string const& v : order_) {
      auto it = fixed.find(v);
      if (it == fixed.end()) break;
      pinned_.push_back(it->second);
    }

    ready_.resize(order_.size() + 1);
    for (std::size_t i = 0; i < c.disjuncts.size(); ++i) {
      std::size_t depth = 0;
      for (auto const& v : vars[i]) {
        auto pos = static_cast<std::size_t>(std::find(order_.begin(), order_.end(), v) - order_.begin());
        depth = std::max(depth, pos + 1);
      }
      ready_[depth].push_back(compiled_.size());
      compiled_.emplace_back(CompiledTerm(c.disjuncts[i].lhs, order_), CompiledTerm(c.disjuncts[i].rhs, order_));
    }
    values_.resize(order_.size());
  }

  Verdict run() {
    Verdict v;
    if (search(0)) {
      v.kind = VerdictKind::holds;
    } else {
      v.kind = VerdictKind::fails;
      for (std::size_t i = 0; i < order_.size(); ++i) v.counterexample.push_back({order_[i], values_[i]});
    }
    v.checked = checked_;
    return v;
  }

 private:
  bool search(std::size_t depth) {
    ++checked_;
    for (std::size_t idx : ready_[depth]) {
      auto const& [lhs, rhs] = compiled_[idx];
      if (lhs.eval(frame_, values_) == rhs.eval(frame_, values_)) return true;
    }
    if (depth == order_.size()) return false;
    if (depth < pinned_.size()) {
      values_[depth] = pinned_[depth];
      return search(depth + 1);
    }
    std::uint32_t const size = frame_.algebra().size();
    for (std::uint32_t x = 0; x < size; ++x) {
      values_[depth] = Element{x};
      if (!search(depth + 1)) return false;
    }
    return true;
  }

  FiniteFrame const& frame_;
  std::vector<std::string> order_;
  std::vector<std::vector<std::size_t>> ready_;
  std::vector<std::pair<CompiledTerm, CompiledTerm>> compiled_;
  std::vector<Element> values_;
  std::vector<Element> pinned_;
  std::uint64_t checked_ = 0;
};

}  // namespace

Verdict check_clause(FiniteFrame const& frame, Clause const& c, std::map<std::string, Element> const& fixed) {
  if (c.disjuncts.empty()) throw UsageError("a clause needs at least one disjunct");
  return ClauseSearch(frame, c, fixed).run();
}

Verdict check_identity(FiniteFrame const& frame, Identity const& e, std::map<std::string, Element> const& fixed) {
  return check_clause(frame, Clause{{e}}, fixed);
}

Verdict check_psi(FiniteFrame const& frame, Identity const& e, unsigned k) {
  FiniteAlgebra const& alg = frame.algebra();
  std::set<std::string> taken = free_variables(e);
  std::string const y = fresh_variable(taken);
  taken.insert(y);
  std::string const z = fresh_variable(taken);
  Identity const rel = relativize(e, z);

  std::map<std::uint32_t, std::uint32_t> first_preimage;
  for (std::uint32_t x = 0; x < alg.size(); ++x) {
    Element v{x};
    for (unsigned i = 0; i < k; ++i) v = frame.apply(v);
    if (v != alg.bottom() && v != alg.top()) first_preimage.emplace(v.bits(), x);
  }

  Verdict out{VerdictKind::holds, {}, alg.size()};
  for (auto const& [value, pre] : first_preimage) {
    Verdict const v = check_identity(frame, rel, {{z, Element{value}}});
    out.checked += v.checked;
    if (v.failed()) {
      out.kind = VerdictKind::fails;
      out.counterexample.push_back({y, Element{pre}});
      for (Binding const& b : v.counterexample)
        if (b.name != z) out.counterexample.push_back(b);
      return out;
    }
  }
  return out;
}

Verdict check_clause(Frame const& frame, Clause const& c) {
  if (!frame.is_finite()) throw UsageError("clauses are checked exhaustively and need a finite frame");
  return check_clause(frame.finite(), c);
}

Verdict check_identity(Frame const& frame, Identity const& e, Strategy strategy) {
  if (frame.is_finite()) return check_identity(frame.finite(), e);

  SymbolicFrame const& sym = frame.symbolic();
  std::set<std::string> const vars = free_variables(e);
  if (vars.empty()) {
    std::map<std::string, EPSet> const none;
    bool const ok = eval_term(sym, e.lhs, none) == eval_term(sym, e.rhs, none);
    return {ok ? VerdictKind::holds : VerdictKind::fails, {}, 1};
  }
  if (strategy.kind == Strategy::Kind::exhaustive) {
    throw UsageError("exhaustive checks need a finite frame; use a sampled strategy");
  }
  EPSetSampler sampler(strategy.seed);
  for (std::uint64_t i = 0; i < strategy.count; ++i) {
    std::map<std::string, EPSet> assignment;
    for (auto const& v : vars) assignment.emplace(v, sampler.next());
    if (eval_term(sym, e.lhs, assignment) != eval_term(sym, e.rhs, assignment)) {
      Verdict v{VerdictKind::fails, {}, i + 1};
      for (auto const& [name, value] : assignment) v.counterexample.push_back({name, value});
      return v;
    }
  }
  return {VerdictKind::holds_on_sample, {}, strategy.count};
}

}  // namespace ceplab
