#pragma once

// Terms over the signature {0, -, &, f}. Sugar (1, |, ->, <->) is expanded
// by the builders and the parser, so every Term uses the five core
// constructors only.
//
// Term grammar (lowest precedence first):
//   bicond := arrow ('<->' arrow)*          left-associative
//   arrow  := join ('->' arrow)?            right-associative
//   join   := meet ('|' meet)*
//   meet   := unary ('&' unary)*
//   unary  := '-' unary | primary
//   primary:= '0' | '1' | ident | F '(' bicond ')' | 'nbar' nat | '(' bicond ')'
// where F is one of f, g, h (all name the frame operation) and ident is an
// ASCII identifier other than those three and 'nbar'.
// identity := bicond '=' bicond

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ceplab/frame.hpp"
#include "ceplab/verdict.hpp"

namespace ceplab {

class Term {
 public:
  enum class Kind { zero, var, neg, meet, fapp };

  static Term zero();
  static Term var(std::string name);
  static Term neg(Term t);
  static Term meet(Term a, Term b);
  static Term fapp(Term t);

  static Term one();
  static Term join(Term a, Term b);
  static Term arrow(Term a, Term b);
  static Term bicond(Term a, Term b);
  // f applied k times.
  static Term fpow(unsigned k, Term t);

  Kind kind() const noexcept { return kind_; }
  std::string const& name() const noexcept { return name_; }
  std::span<Term const> children() const noexcept { return children_; }
  Term const& child(std::size_t i = 0) const { return children_.at(i); }
  std::size_t size() const noexcept;

  friend bool operator==(Term const&, Term const&) = default;

 private:
  Term(Kind kind, std::string name, std::vector<Term> children)
      : kind_(kind), name_(std::move(name)), children_(std::move(children)) {}

  Kind kind_;
  std::string name_;
  std::vector<Term> children_;
};

struct Identity {
  Term lhs, rhs;
  friend bool operator==(Identity const&, Identity const&) = default;
};

// Universally quantified disjunction of identities.
struct Clause {
  std::vector<Identity> disjuncts;
};

std::set<std::string> free_variables(Term const& t);
std::set<std::string> free_variables(Identity const& e);
std::set<std::string> free_variables(Clause const& c);

std::string to_string(Term const& t);
std::string to_string(Identity const& e);
std::string to_string(Clause const& c);

Term parse_term(std::string_view text);
Identity parse_identity(std::string_view text);

// {n} as a term in the C_X signature: nbar(0) = f(0) and
// nbar(n+1) = -nbar(0) & ... & -nbar(n) & f^(n+2)(0).
Term nbar(unsigned n);

using Assignment = std::map<std::string, Value>;

// Throws UsageError on an unbound variable or a value of the wrong kind.
Value eval_term(Frame const& frame, Term const& t, Assignment const& assignment);
Element eval_term(FiniteFrame const& frame, Term const& t, std::map<std::string, Element> const& assignment);
EPSet eval_term(SymbolicFrame const& frame, Term const& t, std::map<std::string, EPSet> const& assignment);

// Postfix form of a term for tight evaluation loops on finite frames.
class CompiledTerm {
 public:
  // `slots` fixes the order of variable values passed to eval().
  CompiledTerm(Term const& t, std::vector<std::string> const& slots);

  Element eval(FiniteFrame const& frame, std::span<Element const> values) const;

 private:
  enum class Op : std::uint8_t { zero, load, neg, meet, fapp };
  struct Instr {
    Op op;
    std::uint32_t slot;
  };
  std::vector<Instr> code_;
  std::size_t depth_ = 0;
};

// Finite frames: exhaustive over all assignments. Symbolic frames: identities
// without variables are decided by one evaluation; otherwise a sampled
// strategy draws each variable from the set sampler.
Verdict check_identity(Frame const& frame, Identity const& e, Strategy strategy);

// t^y: 0 -> 0, x -> x & y, (s & t) -> s^y & t^y, -t -> -(t^y) & y,
// f(t) -> f(t^y). Throws UsageError if y occurs in t.
Term relativize(Term const& t, std::string const& y);
Identity relativize(Identity const& e, std::string const& y);

Term substitute(Term const& t, std::string const& var, Term const& replacement);
Identity substitute(Identity const& e, std::string const& var, Term const& replacement);

// Modal formulas over letters, bot, ~, & and <>; the parser also accepts
// top, |, ->, <-> and [] and expands them on the spot.
class ModalFormula {
 public:
  enum class Kind { bot, letter, negation, conjunction, diamond };

  static ModalFormula bot();
  static ModalFormula letter(std::string name);
  static ModalFormula negation(ModalFormula a);
  static ModalFormula conjunction(ModalFormula a, ModalFormula b);
  static ModalFormula diamond(ModalFormula a);

  Kind kind() const noexcept { return kind_; }
  std::string const& name() const noexcept { return name_; }
  ModalFormula const& child(std::size_t i = 0) const { return children_.at(i); }

  friend bool operator==(ModalFormula const&, ModalFormula const&) = default;

 private:
  ModalFormula(Kind kind, std::string name, std::vector<ModalFormula> children)
      : kind_(kind), name_(std::move(name)), children_(std::move(children)) {}

  Kind kind_;
  std::string name_;
  std::vector<ModalFormula> children_;
};

ModalFormula parse_modal(std::string_view text);
std::string to_string(ModalFormula const& phi);

Term iota(ModalFormula const& phi);
Term iota(std::string_view modal_text);

enum class ClauseMode { phi, psi };

// phi:  f(y)=1 | f(-y)=1 | ((f(y)<->y) & (f(-y)<->-y) & (l^y<->r^y)) = 1
// psi:  f^k(y)=1 | f^k(y)=0 | l^z = r^z with z := f^k(y)
// y is a variable name not occurring in e ("y" when available).
Clause make_clause(ClauseMode mode, Identity const& e, unsigned k = 2);

// Exhaustive over all assignments of a finite frame. Variables are bound in
// an order that lets low-arity disjuncts prune whole subtrees.
// Variables listed in `fixed` keep the given value instead of ranging.
Verdict check_clause(Frame const& frame, Clause const& c);
Verdict check_clause(FiniteFrame const& frame, Clause const& c, std::map<std::string, Element> const& fixed = {});
Verdict check_identity(FiniteFrame const& frame, Identity const& e, std::map<std::string, Element> const& fixed = {});

// Decides make_clause(psi, e, k) on a finite frame by grouping y by the value
// z = f^k(y): the clause holds iff e relativized at z holds for every such z
// other than 0 and 1. A counterexample binds y to the least such preimage.
Verdict check_psi(FiniteFrame const& frame, Identity const& e, unsigned k = 2);

}  // namespace ceplab
