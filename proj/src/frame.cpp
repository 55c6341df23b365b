#include "ceplab/frame.hpp"

#include <bit>

#include "ceplab/errors.hpp"

namespace ceplab {

namespace {

constexpr std::size_t kMaxListed = 8;

void append_listing(std::string& msg, std::vector<std::string> const& items) {
  for (std::size_t i = 0; i < items.size() && i < kMaxListed; ++i) msg += (i ? ", " : " ") + items[i];
  if (items.size() > kMaxListed) msg += ", ... (" + std::to_string(items.size()) + " total)";
}

template <class Rule>
FiniteFrame build_square(FiniteFrame const& base, Rule rule) {
  FiniteAlgebra const& a = base.algebra();
  FiniteAlgebra const prod = product_algebra(a, a);
  std::vector<Element> table(prod.size());
  for (std::uint32_t p = 0; p < prod.size(); ++p) {
    auto const [x, y] = pair_decode(a, a, Element{p});
    auto const [fx, fy] = rule(x, y);
    table[p] = pair_encode(a, a, fx, fy);
  }
  return FiniteFrame(prod, std::move(table));
}

}  // namespace

FiniteFrame::FiniteFrame(FiniteAlgebra alg, std::vector<Element> table)
    : alg_(alg), table_(std::move(table)) {
  if (table_.size() != alg_.size()) {
    throw ValidationError("frame table has " + std::to_string(table_.size()) + " entries, carrier has " +
                          std::to_string(alg_.size()));
  }
  std::vector<std::string> bad;
  for (std::uint32_t x = 0; x < alg_.size(); ++x) {
    if (!alg_.contains(table_[x])) bad.push_back("f(" + to_hex(Element{x}) + ")=" + to_hex(table_[x]));
  }
  if (!bad.empty()) {
    std::string msg = "frame table leaves the carrier:";
    append_listing(msg, bad);
    throw ValidationError(msg);
  }
}

std::string to_string(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
  }
  return "?";
}

EPSet SymbolicFrame::apply(EPSet const& s) const {
  auto in_x = [this](std::uint64_t n) { return parameter_.contains(n); };
  switch (family_) {
    case Family::A:
      if (auto n = initial_segment_length(s)) return ep::initial_segment(*n + 1);
      if (s == ep::two_e()) return ep::naturals();
      if (auto k = cosegment_length(s); k && *k >= 1 && in_x(*k - 1)) return ep::naturals();
      return s;
    case Family::B:
      if (auto n = cosegment_length(s)) return ep_neg(ep::initial_segment(*n + 1));
      if (s == ep_neg(ep::two_e())) return ep::empty();
      if (auto k = initial_segment_length(s); k && *k >= 1 && in_x(*k - 1)) return ep::empty();
      return s;
    case Family::C:
      if (auto n = initial_segment_length(s)) return ep::initial_segment(*n + 1);
      if (in_e_star(s)) return s;
      if (auto p = cosingleton_point(s); p && in_x(*p)) return s;
      if (s.is_finite()) return ep_join(s, ep::singleton(*s.max() + 1));
      return ep::naturals();
  }
  throw UsageError("unknown family");
}

std::string to_string(Value const& v) {
  if (auto const* e = std::get_if<Element>(&v)) return to_hex(*e);
  return to_string(std::get<EPSet>(v));
}

FiniteFrame const& Frame::finite() const {
  if (auto const* f = std::get_if<FiniteFrame>(&impl_)) return *f;
  throw UsageError("operation needs a finite frame");
}

SymbolicFrame const& Frame::symbolic() const {
  if (auto const* f = std::get_if<SymbolicFrame>(&impl_)) return *f;
  throw UsageError("operation needs a symbolic frame");
}

FiniteFrame finite_frame(FiniteAlgebra alg, std::map<std::uint32_t, std::uint32_t> const& entries) {
  std::vector<std::string> problems;
  std::vector<Element> table(alg.size());
  for (std::uint32_t x = 0; x < alg.size(); ++x) {
    auto it = entries.find(x);
    if (it == entries.end()) {
      problems.push_back("missing f(" + to_hex(Element{x}) + ")");
      continue;
    }
    if (!alg.contains(Element{it->second})) {
      problems.push_back("f(" + to_hex(Element{x}) + ")=" + to_hex(Element{it->second}) + " outside carrier");
    }
    table[x] = Element{it->second};
  }
  for (auto const& [x, fx] : entries) {
    if (!alg.contains(Element{x})) problems.push_back("input " + to_hex(Element{x}) + " outside carrier");
  }
  if (!problems.empty()) {
    std::string msg = "invalid frame table:";
    append_listing(msg, problems);
    throw ValidationError(msg);
  }
  return FiniteFrame(alg, std::move(table));
}

FiniteFrame identity_frame(unsigned atoms) {
  FiniteAlgebra const alg(atoms);
  return FiniteFrame(alg, enumerate(alg, Enumeration::all));
}

FiniteFrame negation_frame(unsigned atoms) {
  FiniteAlgebra const alg(atoms);
  std::vector<Element> table(alg.size());
  for (std::uint32_t x = 0; x < alg.size(); ++x) table[x] = alg.neg(Element{x});
  return FiniteFrame(alg, std::move(table));
}

FiniteFrame complex_algebra(KripkeFrame const& k) {
  if (k.worlds.empty()) throw UsageError("Kripke frame has no worlds");
  if (k.worlds.size() > FiniteAlgebra::kAtomCap) {
    throw ResourceError("atom cap exceeded: " + std::to_string(k.worlds.size()) + " worlds");
  }
  FiniteAlgebra const alg(static_cast<unsigned>(k.worlds.size()));
  // predecessors[y] = { x : x R y }
  std::vector<std::uint32_t> predecessors(k.worlds.size(), 0);
  for (auto const& [x, y] : k.relation) {
    if (x >= k.worlds.size() || y >= k.worlds.size()) throw UsageError("relation mentions an unknown world");
    predecessors[y] |= std::uint32_t{1} << x;
  }
  std::vector<Element> table(alg.size());
  for (std::uint32_t s = 1; s < alg.size(); ++s) {
    table[s] = Element{table[s & (s - 1)].bits() | predecessors[std::countr_zero(s)]};
  }
  return FiniteFrame(alg, std::move(table));
}

KripkeFrame wheel_kripke(unsigned n) {
  if (n < 5) throw UsageError("wheel frames defined for n >= 5");
  KripkeFrame k;
  for (unsigned i = 0; i < n; ++i) k.worlds.push_back(std::to_string(i));
  k.worlds.emplace_back("h");
  std::size_t const hub = n;
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y : {(x + n - 1) % n, x, (x + 1) % n}) k.relation.emplace_back(x, y);
    k.relation.emplace_back(hub, x);
    k.relation.emplace_back(x, hub);
  }
  k.relation.emplace_back(hub, hub);
  return k;
}

FiniteFrame wheel(unsigned n) { return complex_algebra(wheel_kripke(n)); }

FiniteFrame frame_product(FiniteFrame const& left, FiniteFrame const& right) {
  FiniteAlgebra const& a = left.algebra();
  FiniteAlgebra const& b = right.algebra();
  FiniteAlgebra const prod = product_algebra(a, b);
  std::vector<Element> table(prod.size());
  for (std::uint32_t p = 0; p < prod.size(); ++p) {
    auto const [x, y] = pair_decode(a, b, Element{p});
    table[p] = pair_encode(a, b, left.apply(x), right.apply(y));
  }
  return FiniteFrame(prod, std::move(table));
}

FiniteFrame star(FiniteFrame const& base) {
  FiniteAlgebra const& a = base.algebra();
  return build_square(base, [&](Element x, Element y) -> std::pair<Element, Element> {
    if (x == a.bottom() || y == a.bottom()) return {base.apply(x), base.apply(y)};
    return {a.top(), a.top()};
  });
}

std::vector<std::uint32_t> sharp_middle_index(FiniteAlgebra const& alg) {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> index(alg.size(), kUnset);
  std::uint32_t next = 0;
  for (std::uint32_t u = 1; u + 1 < alg.size(); ++u) {
    if (index[u] != kUnset) continue;
    index[u] = next++;
    index[alg.neg(Element{u}).bits()] = next++;
  }
  return index;
}

SharpConditions scan_sharp_conditions(FiniteAlgebra const& a, FiniteFrame const& sharp_frame) {
  SharpConditions out{true, true, true};
  Element const zz = pair_encode(a, a, a.bottom(), a.bottom());
  Element const oo = pair_encode(a, a, a.top(), a.top());
  FiniteAlgebra const& prod = sharp_frame.algebra();
  for (std::uint32_t x = 1; x + 1 < a.size(); ++x) {
    bool row_zero = false, row_one = false, col_zero = false, col_one = false;
    for (std::uint32_t y = 1; y + 1 < a.size(); ++y) {
      Element const p = pair_encode(a, a, Element{x}, Element{y});
      Element const fp = sharp_frame.apply(p);
      Element const fq = sharp_frame.apply(pair_encode(a, a, Element{y}, Element{x}));
      if (sharp_frame.apply(prod.neg(p)) != prod.neg(fp)) out.complement = false;
      row_zero |= fp == zz;
      row_one |= fp == oo;
      col_zero |= fq == zz;
      col_one |= fq == oo;
    }
    out.rows = out.rows && row_zero && row_one;
    out.columns = out.columns && col_zero && col_one;
  }
  return out;
}

FiniteFrame sharp(FiniteFrame const& base) {
  FiniteAlgebra const& a = base.algebra();
  if (base.apply(a.bottom()) != a.bottom()) throw UsageError("sharp needs a normal frame (f(0) = 0)");
  if (base.apply(a.top()) != a.top()) throw UsageError("sharp needs a unit-preserving frame (f(1) = 1)");
  if (a.size() < 8) throw UsageError("sharp needs a carrier with at least 8 elements");

  std::vector<std::uint32_t> const index = sharp_middle_index(a);
  auto dual = [&](Element x) { return a.neg(base.apply(a.neg(x))); };
  FiniteFrame out = build_square(base, [&](Element x, Element y) -> std::pair<Element, Element> {
    if (y == a.bottom()) return {base.apply(x), a.bottom()};
    if (x == a.bottom()) return {a.bottom(), base.apply(y)};
    if (y == a.top()) return {dual(x), a.top()};
    if (x == a.top()) return {a.top(), dual(y)};
    bool const full = ((index[x.bits()] / 2 + index[y.bits()]) % 2) == 0;
    return full ? std::pair{a.top(), a.top()} : std::pair{a.bottom(), a.bottom()};
  });
  if (!scan_sharp_conditions(a, out).all()) {
    throw InternalError("sharp construction violates its complement/row/column conditions");
  }
  return out;
}

FiniteFrame flat(FiniteFrame const& base) {
  FiniteAlgebra const& a = base.algebra();
  return build_square(base, [&](Element x, Element y) -> std::pair<Element, Element> {
    if (y == a.bottom()) return {base.apply(x), a.bottom()};
    if (x == a.bottom()) return {a.bottom(), base.apply(y)};
    if (y == a.top()) return {base.apply(x), a.top()};
    if (x == a.top()) return {a.top(), base.apply(y)};
    return {a.top(), a.top()};
  });
}

FiniteFrame negated_operation(FiniteFrame const& base) {
  FiniteAlgebra const& a = base.algebra();
  std::vector<Element> table(a.size());
  for (std::uint32_t x = 0; x < a.size(); ++x) table[x] = a.neg(base.apply(Element{x}));
  return FiniteFrame(a, std::move(table));
}

SymbolicFrame family_frame(Family family, EPSet x) { return SymbolicFrame(family, std::move(x)); }

Value apply_f(Frame const& frame, Value const& x) {
  if (frame.is_finite()) {
    auto const* e = std::get_if<Element>(&x);
    FiniteFrame const& f = frame.finite();
    if (e == nullptr || !f.algebra().contains(*e)) throw UsageError("element is not in the frame's carrier");
    return f.apply(*e);
  }
  auto const* s = std::get_if<EPSet>(&x);
  if (s == nullptr) throw UsageError("symbolic frames act on sets, not bit patterns");
  return frame.symbolic().apply(*s);
}

Corners square_corners(FiniteAlgebra const& a) {
  return {pair_encode(a, a, a.bottom(), a.bottom()), pair_encode(a, a, a.bottom(), a.top()),
          pair_encode(a, a, a.top(), a.bottom()), pair_encode(a, a, a.top(), a.top())};
}

}  // namespace ceplab
