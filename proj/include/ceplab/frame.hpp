#pragma once

// Boolean frames: a Boolean algebra together with one arbitrary unary
// operation f. Finite frames store f as a table indexed by element encoding;
// symbolic frames act on eventually periodic subsets of N by a rule.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ceplab/algebra.hpp"
#include "ceplab/periodic.hpp"

namespace ceplab {

class FiniteFrame {
 public:
  // `table[x.bits()]` is f(x). Throws ValidationError unless the table has
  // exactly alg.size() entries, all inside the carrier.
  FiniteFrame(FiniteAlgebra alg, std::vector<Element> table);

  FiniteAlgebra const& algebra() const noexcept { return alg_; }
  Element apply(Element x) const noexcept { return table_[x.bits()]; }
  std::span<Element const> table() const noexcept { return table_; }

  friend bool operator==(FiniteFrame const&, FiniteFrame const&) = default;

 private:
  FiniteAlgebra alg_;
  std::vector<Element> table_;
};

enum class Family { A, B, C };

std::string to_string(Family family);

// The three operations on P(N) parameterized by X:
//   A_X: {0..n-1} -> {0..n};  2E -> N;  -{0..n} -> N when n in X;  else S.
//   B_X: -{0..n-1} -> -{0..n};  -2E -> empty;  {0..n} -> empty when n in X;
//        else S.
//   C_X: {0..n-1} -> {0..n};  S in E* -> S;  -{n} -> -{n} when n in X;
//        other finite S -> S + {max S + 1};  else N.
class SymbolicFrame {
 public:
  SymbolicFrame(Family family, EPSet parameter)
      : family_(family), parameter_(std::move(parameter)) {}

  Family family() const noexcept { return family_; }
  EPSet const& parameter() const noexcept { return parameter_; }
  EPSet apply(EPSet const& s) const;

 private:
  Family family_;
  EPSet parameter_;
};

using Value = std::variant<Element, EPSet>;

std::string to_string(Value const& v);

class Frame {
 public:
  Frame(FiniteFrame f) : impl_(std::move(f)) {}      // NOLINT(google-explicit-constructor)
  Frame(SymbolicFrame f) : impl_(std::move(f)) {}    // NOLINT(google-explicit-constructor)

  bool is_finite() const noexcept { return std::holds_alternative<FiniteFrame>(impl_); }
  // Throw UsageError when the frame is of the other kind.
  FiniteFrame const& finite() const;
  SymbolicFrame const& symbolic() const;

 private:
  std::variant<FiniteFrame, SymbolicFrame> impl_;
};

struct KripkeFrame {
  std::vector<std::string> worlds;
  std::vector<std::pair<std::size_t, std::size_t>> relation;
};

// Validating constructor from a sparse table; every input must be present
// and every output inside the carrier. The ValidationError lists offenders.
FiniteFrame finite_frame(FiniteAlgebra alg, std::map<std::uint32_t, std::uint32_t> const& entries);

FiniteFrame identity_frame(unsigned atoms);
FiniteFrame negation_frame(unsigned atoms);

// f(S) = { x : x R y for some y in S }.
FiniteFrame complex_algebra(KripkeFrame const& k);

// Worlds 0..n-1 on a cycle with tolerance-1 adjacency, plus a hub (index n)
// related both ways to every world and to itself.
KripkeFrame wheel_kripke(unsigned n);
FiniteFrame wheel(unsigned n);

FiniteFrame frame_product(FiniteFrame const& left, FiniteFrame const& right);

// <a,b> -> <f a, f b> when a = 0 or b = 0, <1,1> otherwise.
FiniteFrame star(FiniteFrame const& base);

// Border rows <a,0> -> <f a,0>, <0,a> -> <0,f a>, <a,1> -> <-f(-a),1>,
// <1,a> -> <1,-f(-a)>. A middle cell <a,b> (0<a,b<1) goes to <1,1> iff
// floor(idx(a)/2) + idx(b) is even, where idx lists the nontrivial elements
// in ascending encoding with each first-seen u immediately followed by -u.
// Requires a normal, unit-preserving base with at least 8 elements; the
// complement and row/column conditions are re-verified before returning.
FiniteFrame sharp(FiniteFrame const& base);

// The middle-cell index used by sharp(): position of each nontrivial element.
std::vector<std::uint32_t> sharp_middle_index(FiniteAlgebra const& alg);

struct SharpConditions {
  bool complement = false;  // f(<-a,-b>) = -f(<a,b>) on middle cells
  bool rows = false;        // every 0<x<1 sees both <0,0> and <1,1> along its row
  bool columns = false;     // and along its column
  bool all() const noexcept { return complement && rows && columns; }
};

SharpConditions scan_sharp_conditions(FiniteAlgebra const& base, FiniteFrame const& sharp_frame);

// <a,0> -> <f a,0>, <0,a> -> <0,f a>, <a,1> -> <f a,1>, <1,a> -> <1,f a>,
// middle cells -> <1,1>. Rows are tried in that order; for normal,
// unit-preserving bases they agree on overlaps.
FiniteFrame flat(FiniteFrame const& base);

// x -> -f(x).
FiniteFrame negated_operation(FiniteFrame const& base);

SymbolicFrame family_frame(Family family, EPSet x);

Value apply_f(Frame const& frame, Value const& x);

// Corners <0,0>, <0,1>, <1,0>, <1,1> of a square frame A x A.
struct Corners {
  Element zero_zero, zero_one, one_zero, one_one;
  std::vector<Element> all() const { return {zero_zero, zero_one, one_zero, one_one}; }
};

Corners square_corners(FiniteAlgebra const& factor);

}  // namespace ceplab
