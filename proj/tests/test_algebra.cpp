#include <doctest.h>

#include <set>
#include <vector>

#include "ceplab/algebra.hpp"
#include "ceplab/errors.hpp"

using namespace ceplab;

namespace {

// Elements as explicit atom sets.
std::set<unsigned> atoms_of(Element x, unsigned n) {
  std::set<unsigned> out;
  for (unsigned i = 0; i < n; ++i)
    if (x.bits() >> i & 1) out.insert(i);
  return out;
}

Element op2(FiniteAlgebra const& alg, BoolOp op, Element x, Element y) {
  Element const args[] = {x, y};
  return boolean_op(alg, op, args);
}

}  // namespace

TEST_CASE("powerset algebra sizes and cap") {
  CHECK(make_powerset_algebra(1).size() == 2);
  CHECK(make_powerset_algebra(2).size() == 4);
  CHECK(make_powerset_algebra(24).size() == (1u << 24));
  REQUIRE_THROWS_AS(make_powerset_algebra(25), ResourceError);
  try {
    make_powerset_algebra(25);
  } catch (ResourceError const& e) {
    CHECK(std::string(e.what()).find("atom cap exceeded") != std::string::npos);
  }
  CHECK_THROWS_AS(make_powerset_algebra(0), UsageError);
  CHECK_THROWS_AS(make_powerset_algebra(5, 4), ResourceError);
}

TEST_CASE("boolean operations") {
  auto const alg = make_powerset_algebra(2);
  CHECK(op2(alg, BoolOp::meet, Element{0b01}, Element{0b11}) == Element{0b01});
  CHECK(op2(alg, BoolOp::bicond, Element{0b01}, Element{0b11}) == Element{0b01});
  for (std::uint32_t x = 0; x < 4; ++x) CHECK(op2(alg, BoolOp::bicond, Element{x}, Element{x}) == alg.top());
  Element const one[] = {Element{0b01}};
  CHECK(boolean_op(alg, BoolOp::neg, one) == Element{0b10});
  CHECK_THROWS_AS(boolean_op(alg, BoolOp::meet, one), UsageError);
  Element const wide[] = {Element{0b100}, Element{0}};
  CHECK_THROWS_AS(boolean_op(alg, BoolOp::join, wide), UsageError);
}

TEST_CASE("order") {
  auto const alg = make_powerset_algebra(2);
  for (std::uint32_t y = 0; y < 4; ++y) CHECK(leq(alg, Element{0}, Element{y}));
  CHECK(leq(alg, Element{0b01}, Element{0b11}));
  CHECK_FALSE(leq(alg, Element{0b10}, Element{0b01}));
  CHECK_THROWS_AS(leq(alg, Element{0b100}, Element{0}), UsageError);
}

TEST_CASE("enumeration") {
  auto const two = make_powerset_algebra(2);
  CHECK(enumerate(two, Enumeration::atoms) == std::vector{Element{0b01}, Element{0b10}});
  CHECK(enumerate(two, Enumeration::coatoms) == std::vector{Element{0b10}, Element{0b01}});
  CHECK(enumerate(make_powerset_algebra(1), Enumeration::all) == std::vector{Element{0}, Element{1}});
  auto const four = make_powerset_algebra(4);
  auto const co = enumerate(four, Enumeration::coatoms);
  auto const at = enumerate(four, Enumeration::atoms);
  REQUIRE(co.size() == 4);
  for (unsigned i = 0; i < 4; ++i) CHECK(co[i] == four.neg(at[i]));
}

TEST_CASE("Boolean algebra laws against a set model, up to 4 atoms") {
  for (unsigned n = 1; n <= 4; ++n) {
    auto const alg = make_powerset_algebra(n);
    std::set<unsigned> all;
    for (unsigned i = 0; i < n; ++i) all.insert(i);
    for (Element x : enumerate(alg, Enumeration::all)) {
      auto const sx = atoms_of(x, n);
      std::set<unsigned> cx;
      for (unsigned i : all)
        if (!sx.contains(i)) cx.insert(i);
      CHECK(atoms_of(alg.neg(x), n) == cx);
      for (Element y : enumerate(alg, Enumeration::all)) {
        auto const sy = atoms_of(y, n);
        std::set<unsigned> inter, uni, imp, iff;
        for (unsigned i : all) {
          bool const a = sx.contains(i), b = sy.contains(i);
          if (a && b) inter.insert(i);
          if (a || b) uni.insert(i);
          if (!a || b) imp.insert(i);
          if (a == b) iff.insert(i);
        }
        CHECK(atoms_of(alg.meet(x, y), n) == inter);
        CHECK(atoms_of(alg.join(x, y), n) == uni);
        CHECK(atoms_of(alg.arrow(x, y), n) == imp);
        CHECK(atoms_of(alg.bicond(x, y), n) == iff);
        CHECK(alg.leq(x, y) == (inter == sx));
        CHECK(alg.join(x, alg.meet(x, y)) == x);
        CHECK(alg.neg(alg.join(x, y)) == alg.meet(alg.neg(x), alg.neg(y)));
      }
    }
  }
}

TEST_CASE("product encoding") {
  auto const a = make_powerset_algebra(2);
  auto const b = make_powerset_algebra(3);
  auto const p = product_algebra(a, b);
  CHECK(p.atom_count() == 5);
  CHECK(pair_encode(a, b, a.top(), b.bottom()) == Element{0b00011});
  CHECK(pair_encode(a, b, a.bottom(), b.bottom()) == p.bottom());
  for (Element x : enumerate(a, Enumeration::all))
    for (Element y : enumerate(b, Enumeration::all)) {
      auto const [u, v] = pair_decode(a, b, pair_encode(a, b, x, y));
      CHECK(u == x);
      CHECK(v == y);
    }
  CHECK(to_hex(Element{0x33}) == "0x33");
}
