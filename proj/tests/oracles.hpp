#pragma once

// Reference implementations used to cross-check the library. Each works
// from first principles on small inputs: explicit sets of worlds,
// pointwise membership vectors and brute-force searches.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ceplab/congruence.hpp"
#include "ceplab/frame.hpp"

namespace oracle {

using ceplab::Element;
using ceplab::FiniteFrame;

// Membership of 0..n-1.
inline std::vector<bool> points(ceplab::EPSet const& s, std::size_t n = 1000) {
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = s.contains(i);
  return out;
}

// Diamond over explicit world sets: { w : w R v for some v in s }.
inline std::set<std::size_t> diamond(ceplab::KripkeFrame const& k, std::set<std::size_t> const& s) {
  std::set<std::size_t> out;
  for (auto const& [a, b] : k.relation)
    if (s.contains(b)) out.insert(a);
  return out;
}

inline std::set<std::size_t> worlds_of(Element x, std::size_t n) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (x.bits() >> i & 1) out.insert(i);
  return out;
}

// Congruence as a relation: x ~ y iff x & a = y & a, compatible with f.
inline bool congruential_by_pairs(FiniteFrame const& f, Element a) {
  std::uint32_t const n = f.algebra().size();
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if ((x & a.bits()) == (y & a.bits()) &&
          (f.apply(Element{x}).bits() & a.bits()) != (f.apply(Element{y}).bits() & a.bits()))
        return false;
  return true;
}

inline std::vector<Element> congruential_elements(FiniteFrame const& f) {
  std::vector<Element> out;
  for (std::uint32_t a = 0; a < f.algebra().size(); ++a)
    if (congruential_by_pairs(f, Element{a})) out.push_back(Element{a});
  return out;
}

// Largest congruential element below c, by scanning every candidate.
inline Element max_congruential_below(FiniteFrame const& f, Element c) {
  Element best{0};
  for (Element a : congruential_elements(f)) {
    if ((a.bits() & ~c.bits()) == 0 && __builtin_popcount(a.bits()) > __builtin_popcount(best.bits())) best = a;
  }
  return best;
}

// Some congruence of F restricts to exactly the congruence of B given by a.
inline bool extends(FiniteFrame const& f, ceplab::Subalgebra const& b, Element a) {
  auto above = [&](Element c) {
    std::vector<Element> out;
    for (Element x : b.elements)
      if ((c.bits() & ~x.bits()) == 0) out.push_back(x);
    return out;
  };
  std::vector<Element> const target = above(a);
  for (Element c : congruential_elements(f))
    if (above(c) == target) return true;
  return false;
}

// Subsets of the carrier closed under meet, complement and f (carrier <= 16).
inline std::size_t count_subalgebras(FiniteFrame const& f) {
  std::uint32_t const n = f.algebra().size();
  std::uint32_t const mask = f.algebra().mask();
  std::size_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!(s & 1) || !(s >> mask & 1)) continue;
    bool closed = true;
    for (std::uint32_t x = 0; x < n && closed; ++x) {
      if (!(s >> x & 1)) continue;
      if (!(s >> (~x & mask) & 1) || !(s >> f.apply(Element{x}).bits() & 1)) closed = false;
      for (std::uint32_t y = 0; y < n && closed; ++y)
        if ((s >> y & 1) && !(s >> (x & y) & 1)) closed = false;
    }
    count += closed;
  }
  return count;
}

inline FiniteFrame random_frame(unsigned atoms, std::mt19937_64& rng) {
  ceplab::FiniteAlgebra const alg(atoms);
  std::vector<Element> table(alg.size());
  for (auto& e : table) e = Element{static_cast<std::uint32_t>(rng() % alg.size())};
  return FiniteFrame(alg, table);
}

// Every operation on the 2-atom carrier, in table order.
inline std::vector<FiniteFrame> all_two_atom_frames() {
  ceplab::FiniteAlgebra const alg(2);
  std::vector<FiniteFrame> out;
  std::vector<Element> table(4);
  for (std::uint32_t code = 0; code < 256; ++code) {
    for (std::uint32_t x = 0; x < 4; ++x) table[x] = Element{code >> (2 * x) & 3};
    out.emplace_back(alg, table);
  }
  return out;
}

inline std::vector<FiniteFrame> all_one_atom_frames() {
  ceplab::FiniteAlgebra const alg(1);
  std::vector<FiniteFrame> out;
  for (std::uint32_t code = 0; code < 4; ++code) out.emplace_back(alg, std::vector<Element>{Element{code & 1}, Element{code >> 1}});
  return out;
}

}  // namespace oracle
