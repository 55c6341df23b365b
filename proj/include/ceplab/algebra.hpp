#pragma once

// Finite powerset Boolean algebras. An algebra is identified by its number
// of atoms n; elements are n-bit patterns, bit i set meaning atom i is below
// the element.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ceplab {

class Element {
 public:
  constexpr Element() noexcept = default;
  constexpr explicit Element(std::uint32_t bits) noexcept : bits_(bits) {}

  constexpr std::uint32_t bits() const noexcept { return bits_; }

  friend constexpr bool operator==(Element, Element) noexcept = default;
  friend constexpr auto operator<=>(Element, Element) noexcept = default;

 private:
  std::uint32_t bits_ = 0;
};

enum class BoolOp { meet, join, neg, arrow, bicond };

enum class Enumeration { all, atoms, coatoms };

std::string to_string(BoolOp op);

class FiniteAlgebra {
 public:
  static constexpr unsigned kAtomCap = 24;

  // Throws ResourceError when atom_count exceeds `cap` (itself at most
  // kAtomCap) and UsageError when atom_count is zero.
  explicit FiniteAlgebra(unsigned atom_count, unsigned cap = kAtomCap);

  unsigned atom_count() const noexcept { return atom_count_; }
  std::uint32_t size() const noexcept { return std::uint32_t{1} << atom_count_; }
  std::uint32_t mask() const noexcept { return size() - 1; }

  Element bottom() const noexcept { return Element{0}; }
  Element top() const noexcept { return Element{mask()}; }
  Element atom(unsigned i) const;

  bool contains(Element x) const noexcept { return (x.bits() & ~mask()) == 0; }

  // Unchecked atom-wise operations; arguments are assumed to be members.
  Element meet(Element x, Element y) const noexcept { return Element{x.bits() & y.bits()}; }
  Element join(Element x, Element y) const noexcept { return Element{x.bits() | y.bits()}; }
  Element neg(Element x) const noexcept { return Element{~x.bits() & mask()}; }
  Element arrow(Element x, Element y) const noexcept {
    return Element{(~x.bits() | y.bits()) & mask()};
  }
  Element bicond(Element x, Element y) const noexcept {
    return Element{~(x.bits() ^ y.bits()) & mask()};
  }
  bool leq(Element x, Element y) const noexcept { return (x.bits() & y.bits()) == x.bits(); }

  friend bool operator==(FiniteAlgebra const&, FiniteAlgebra const&) = default;

 private:
  unsigned atom_count_;
};

FiniteAlgebra make_powerset_algebra(unsigned atom_count,
                                    unsigned cap = FiniteAlgebra::kAtomCap);

// Checked operation: arity must match `op` (neg takes one argument, the
// others two) and every argument must belong to `alg`.
Element boolean_op(FiniteAlgebra const& alg, BoolOp op, std::span<Element const> args);

bool leq(FiniteAlgebra const& alg, Element x, Element y);

// `all` lists the carrier in ascending encoding; atoms and coatoms are listed
// by atom index.
std::vector<Element> enumerate(FiniteAlgebra const& alg, Enumeration which);

// A x B is represented on nA + nB atoms: the first factor occupies the low
// nA bits, the second the high nB bits.
FiniteAlgebra product_algebra(FiniteAlgebra const& a, FiniteAlgebra const& b);
Element pair_encode(FiniteAlgebra const& a, FiniteAlgebra const& b, Element x, Element y);
std::pair<Element, Element> pair_decode(FiniteAlgebra const& a, FiniteAlgebra const& b,
                                        Element p);

std::string to_hex(Element x);

}  // namespace ceplab

template <>
struct std::hash<ceplab::Element> {
  std::size_t operator()(ceplab::Element x) const noexcept {
    return std::hash<std::uint32_t>{}(x.bits());
  }
};
