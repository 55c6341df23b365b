#include "ceplab/algebra.hpp"

#include <cstdio>

#include "ceplab/errors.hpp"

namespace ceplab {

std::string to_string(BoolOp op) {
  switch (op) {
    case BoolOp::meet: return "meet";
    case BoolOp::join: return "join";
    case BoolOp::neg: return "neg";
    case BoolOp::arrow: return "arrow";
    case BoolOp::bicond: return "bicond";
  }
  return "?";
}

FiniteAlgebra::FiniteAlgebra(unsigned atom_count, unsigned cap) : atom_count_(atom_count) {
  if (cap > kAtomCap) {
    throw UsageError("atom cap may not be raised above " + std::to_string(kAtomCap));
  }
  if (atom_count == 0) {
    throw UsageError("a powerset algebra needs at least one atom");
  }
  if (atom_count > cap) {
    throw ResourceError("atom cap exceeded: " + std::to_string(atom_count) + " atoms requested, cap is " +
                        std::to_string(cap));
  }
}

Element FiniteAlgebra::atom(unsigned i) const {
  if (i >= atom_count_) {
    throw UsageError("atom index " + std::to_string(i) + " out of range");
  }
  return Element{std::uint32_t{1} << i};
}

FiniteAlgebra make_powerset_algebra(unsigned atom_count, unsigned cap) {
  return FiniteAlgebra(atom_count, cap);
}

Element boolean_op(FiniteAlgebra const& alg, BoolOp op, std::span<Element const> args) {
  std::size_t const arity = op == BoolOp::neg ? 1 : 2;
  if (args.size() != arity) {
    throw UsageError(to_string(op) + " expects " + std::to_string(arity) + " argument(s), got " +
                     std::to_string(args.size()));
  }
  for (Element x : args) {
    if (!alg.contains(x)) {
      throw UsageError("element " + to_hex(x) + " is wider than " + std::to_string(alg.atom_count()) +
                       " atoms");
    }
  }
  switch (op) {
    case BoolOp::meet: return alg.meet(args[0], args[1]);
    case BoolOp::join: return alg.join(args[0], args[1]);
    case BoolOp::neg: return alg.neg(args[0]);
    case BoolOp::arrow: return alg.arrow(args[0], args[1]);
    case BoolOp::bicond: return alg.bicond(args[0], args[1]);
  }
  throw UsageError("unknown operation");
}

bool leq(FiniteAlgebra const& alg, Element x, Element y) {
  if (!alg.contains(x) || !alg.contains(y)) {
    throw UsageError("leq: element outside the carrier");
  }
  return alg.leq(x, y);
}

std::vector<Element> enumerate(FiniteAlgebra const& alg, Enumeration which) {
  std::vector<Element> out;
  switch (which) {
    case Enumeration::all:
      out.reserve(alg.size());
      for (std::uint32_t b = 0; b < alg.size(); ++b) out.emplace_back(b);
      break;
    case Enumeration::atoms:
      for (unsigned i = 0; i < alg.atom_count(); ++i) out.push_back(alg.atom(i));
      break;
    case Enumeration::coatoms:
      for (unsigned i = 0; i < alg.atom_count(); ++i) out.push_back(alg.neg(alg.atom(i)));
      break;
  }
  return out;
}

FiniteAlgebra product_algebra(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  return FiniteAlgebra(a.atom_count() + b.atom_count());
}

Element pair_encode(FiniteAlgebra const& a, FiniteAlgebra const& b, Element x, Element y) {
  if (!a.contains(x) || !b.contains(y)) {
    throw UsageError("pair_encode: component wider than its factor");
  }
  return Element{x.bits() | (y.bits() << a.atom_count())};
}

std::pair<Element, Element> pair_decode(FiniteAlgebra const& a, FiniteAlgebra const& b,
                                        Element p) {
  return {Element{p.bits() & a.mask()}, Element{(p.bits() >> a.atom_count()) & b.mask()}};
}

std::string to_hex(Element x) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", x.bits());
  return buf;
}

}  // namespace ceplab
