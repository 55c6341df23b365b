#include <doctest.h>

#include "ceplab/errors.hpp"
#include "ceplab/frame.hpp"
#include "oracles.hpp"

using namespace ceplab;

namespace {

constexpr std::uint32_t kHub5 = 1u << 5;

std::uint32_t world_set(std::initializer_list<unsigned> ws) {
  std::uint32_t out = 0;
  for (unsigned w : ws) out |= 1u << w;
  return out;
}

}  // namespace

TEST_CASE("finite frames validate their tables") {
  auto const alg = make_powerset_algebra(2);
  auto const id = finite_frame(alg, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  for (std::uint32_t x = 0; x < 4; ++x) CHECK(id.apply(Element{x}) == Element{x});
  auto const neg = negation_frame(2);
  for (std::uint32_t x = 0; x < 4; ++x) CHECK(neg.apply(Element{x}) == Element{~x & 3u});
  CHECK_THROWS_AS(finite_frame(alg, {{0, 0}, {1, 1}, {2, 2}}), ValidationError);
  CHECK_THROWS_AS(finite_frame(alg, {{0, 0}, {1, 1}, {2, 2}, {3, 4}}), ValidationError);
}

TEST_CASE("complex algebras") {
  KripkeFrame const refl{{"a"}, {{0, 0}}};
  auto const f = complex_algebra(refl);
  CHECK(f.apply(Element{0}) == Element{0});
  CHECK(f.apply(Element{1}) == Element{1});
  KripkeFrame const none{{"a", "b"}, {}};
  for (std::uint32_t x = 0; x < 4; ++x) CHECK(complex_algebra(none).apply(Element{x}) == Element{0});
}

TEST_CASE("complex algebra matches the diamond on every 3-world frame") {
  for (std::uint32_t rel = 0; rel < 512; ++rel) {
    KripkeFrame k{{"a", "b", "c"}, {}};
    for (std::size_t i = 0; i < 9; ++i)
      if (rel >> i & 1) k.relation.emplace_back(i / 3, i % 3);
    auto const f = complex_algebra(k);
    for (std::uint32_t x = 0; x < 8; ++x)
      CHECK(oracle::worlds_of(f.apply(Element{x}), 3) == oracle::diamond(k, oracle::worlds_of(Element{x}, 3)));
  }
}

TEST_CASE("wheel frames") {
  auto const w5 = wheel(5);
  CHECK(w5.algebra().size() == 64);
  CHECK(w5.apply(Element{world_set({0})}) == Element{world_set({0, 1, 4}) | kHub5});
  CHECK(w5.apply(Element{0x33}) == w5.algebra().top());
  CHECK(w5.apply(Element{kHub5}) == w5.algebra().top());
  CHECK_THROWS_AS(wheel(4), UsageError);
  for (unsigned n : {5u, 7u}) {
    auto const w = wheel(n);
    CHECK(w.apply(Element{0}) == Element{0});
    for (std::uint32_t x = 1; x < w.algebra().size(); ++x) CHECK(w.apply(w.apply(Element{x})) == w.algebra().top());
  }
}

TEST_CASE("products") {
  auto const w5 = wheel(5);
  auto const p = frame_product(w5, w5);
  auto const& a = w5.algebra();
  CHECK(p.algebra().atom_count() == 12);
  CHECK(p.apply(pair_encode(a, a, a.top(), a.bottom())) == pair_encode(a, a, w5.apply(a.top()), w5.apply(a.bottom())));
  CHECK(p.apply(p.algebra().bottom()) == p.algebra().bottom());
  auto const c = square_corners(a);
  CHECK((p.apply(c.one_zero).bits() & p.apply(c.zero_one).bits()) == 0);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Element const x{static_cast<std::uint32_t>(rng() % 64)}, y{static_cast<std::uint32_t>(rng() % 64)};
    CHECK(p.apply(pair_encode(a, a, x, y)) == pair_encode(a, a, w5.apply(x), w5.apply(y)));
  }
}

TEST_CASE("star") {
  auto const base = wheel(5);
  auto const s = star(frame_product(identity_frame(1), identity_frame(1)));
  CHECK(s.algebra().size() == 16);
  auto const& a = base.algebra();
  auto const st = star(base);
  for (std::uint32_t x = 0; x < 64; ++x) {
    CHECK(st.apply(pair_encode(a, a, Element{x}, Element{0})) == pair_encode(a, a, base.apply(Element{x}), Element{0}));
    CHECK(st.apply(pair_encode(a, a, Element{0}, Element{x})) == pair_encode(a, a, Element{0}, base.apply(Element{x})));
    for (std::uint32_t y = 1; y < 64; y += 7)
      if (x != 0) CHECK(st.apply(pair_encode(a, a, Element{x}, Element{y})) == st.algebra().top());
  }
}

TEST_CASE("sharp") {
  auto const base = wheel(5);
  auto const& a = base.algebra();
  auto const sh = sharp(base);
  CHECK(sh.apply(Element{0}) == Element{0});
  for (std::uint32_t x = 0; x < 64; ++x) {
    Element const ex{x};
    CHECK(sh.apply(pair_encode(a, a, ex, a.top())) == pair_encode(a, a, a.neg(base.apply(a.neg(ex))), a.top()));
    CHECK(sh.apply(pair_encode(a, a, a.top(), ex)) == pair_encode(a, a, a.top(), a.neg(base.apply(a.neg(ex)))));
    CHECK(sh.apply(pair_encode(a, a, ex, a.bottom())) == pair_encode(a, a, base.apply(ex), a.bottom()));
  }
  for (std::uint32_t x = 1; x < 63; ++x)
    for (std::uint32_t y = 1; y < 63; ++y) {
      Element const p = pair_encode(a, a, Element{x}, Element{y});
      Element const fp = sh.apply(p);
      CHECK((fp == sh.algebra().top() || fp == sh.algebra().bottom()));
      CHECK(sh.apply(sh.algebra().neg(p)) == sh.algebra().neg(fp));
    }
  CHECK(scan_sharp_conditions(a, sh).all());
  CHECK_THROWS_AS(sharp(identity_frame(2)), UsageError);
  CHECK_THROWS_AS(sharp(negation_frame(3)), UsageError);
  auto const idx = sharp_middle_index(a);
  CHECK(idx.size() == 64);
}

TEST_CASE("flat") {
  auto const base = wheel(5);
  auto const& a = base.algebra();
  auto const fl = flat(frame_product(identity_frame(2), identity_frame(2)));
  CHECK(fl.algebra().atom_count() == 8);
  auto const small = flat(base);
  for (std::uint32_t x = 0; x < 64; ++x) {
    Element const ex{x};
    CHECK(small.apply(pair_encode(a, a, a.bottom(), ex)) == pair_encode(a, a, a.bottom(), base.apply(ex)));
    CHECK(small.apply(pair_encode(a, a, ex, a.top())) == pair_encode(a, a, base.apply(ex), a.top()));
    CHECK(small.apply(pair_encode(a, a, a.top(), ex)) == pair_encode(a, a, a.top(), base.apply(ex)));
  }
  for (std::uint32_t x = 1; x < 63; ++x)
    for (std::uint32_t y = 1; y < 63; ++y)
      CHECK(small.apply(pair_encode(a, a, Element{x}, Element{y})) == small.algebra().top());
}

TEST_CASE("negated operation") {
  auto const w = wheel(5);
  auto const n = negated_operation(w);
  for (std::uint32_t x = 0; x < 64; ++x) CHECK(n.apply(Element{x}) == w.algebra().neg(w.apply(Element{x})));
}

TEST_CASE("family examples") {
  auto const ax = family_frame(Family::A, ep::finite({1, 3}));
  CHECK(ax.apply(ep::empty()) == ep::singleton(0));
  CHECK(ax.apply(ep::two_e()) == ep::naturals());
  CHECK(ax.apply(ep::odds()) == ep::odds());
  CHECK(ax.apply(ax.apply(ep::empty())) == ep::finite({0, 1}));
  auto const a2 = family_frame(Family::A, ep::singleton(2));
  CHECK(a2.apply(ep_neg(ep::finite({0, 1, 2}))) == ep::naturals());
  CHECK(a2.apply(ep_neg(ep::finite({0, 1}))) == ep_neg(ep::finite({0, 1})));
  auto const cx = family_frame(Family::C, ep::singleton(3));
  CHECK(cx.apply(ep::singleton(1)) == ep::finite({1, 2}));
  CHECK(cx.apply(ep_neg(ep::singleton(3))) == ep_neg(ep::singleton(3)));
  CHECK(cx.apply(ep_neg(ep::singleton(2))) == ep::naturals());
  auto const bx = family_frame(Family::B, ep::finite({2, 4}));
  CHECK(bx.apply(ep::naturals()) == ep_neg(ep::singleton(0)));
  CHECK(bx.apply(ep_neg(ep::two_e())) == ep::empty());
  CHECK(bx.apply(ep::finite({0, 1, 2})) == ep::empty());
  CHECK(bx.apply(ep::finite({0, 1})) == ep::finite({0, 1}));

  Frame const id = identity_frame(2);
  CHECK(std::get<Element>(apply_f(id, Element{2})) == Element{2});
  CHECK(std::get<Element>(apply_f(Frame(wheel(5)), Element{kHub5})) == Element{63});
  CHECK(std::get<EPSet>(apply_f(Frame(ax), ep::odds())) == ep::odds());
  CHECK_THROWS_AS(apply_f(id, ep::odds()), UsageError);
  CHECK_THROWS_AS(apply_f(id, Element{4}), UsageError);
}

namespace {

using Points = std::vector<bool>;
constexpr std::size_t kN = 1200;

bool is_initial(Points const& p, std::size_t& n) {
  n = 0;
  while (n < kN && p[n]) ++n;
  for (std::size_t i = n; i < kN; ++i)
    if (p[i]) return false;
  return n < kN / 2;
}

bool is_coinitial(Points const& p, std::size_t& n) {
  Points q(p.size());
  for (std::size_t i = 0; i < kN; ++i) q[i] = !p[i];
  return is_initial(q, n);
}

Points from(std::function<bool(std::size_t)> const& pred) {
  Points p(kN);
  for (std::size_t i = 0; i < kN; ++i) p[i] = pred(i);
  return p;
}

// The three case splits, evaluated pointwise on membership vectors.
Points oracle_apply(Family fam, Points const& p, Points const& x) {
  std::size_t n = 0;
  bool const infinite = [&] {
    for (std::size_t i = kN / 2; i < kN; ++i)
      if (p[i]) return true;
    return false;
  }();
  switch (fam) {
    case Family::A:
      if (is_initial(p, n)) return from([n](std::size_t i) { return i <= n; });
      if (p == from([](std::size_t i) { return i % 4 == 0; })) return from([](std::size_t) { return true; });
      if (is_coinitial(p, n) && n > 0 && x[n - 1]) return from([](std::size_t) { return true; });
      return p;
    case Family::B:
      if (is_coinitial(p, n)) return from([n](std::size_t i) { return i > n; });
      if (p == from([](std::size_t i) { return i % 4 != 0; })) return from([](std::size_t) { return false; });
      if (is_initial(p, n) && n > 0 && x[n - 1]) return from([](std::size_t) { return false; });
      return p;
    case Family::C: {
      if (!infinite) {
        std::size_t m = 0;
        bool any = false;
        for (std::size_t i = 0; i < kN; ++i)
          if (p[i]) m = i, any = true;
        if (!any) return from([](std::size_t i) { return i == 0; });
        Points q = p;
        q[m + 1] = true;
        return q;
      }
      bool estar = true;
      for (std::size_t i = kN / 2; i < kN; ++i) estar = estar && (p[i] == (i % 2 == 0));
      if (estar) return p;
      std::size_t holes = 0, hole = 0;
      for (std::size_t i = 0; i < kN; ++i)
        if (!p[i]) ++holes, hole = i;
      if (holes == 1 && x[hole]) return p;
      return from([](std::size_t) { return true; });
    }
  }
  return p;
}

}  // namespace

TEST_CASE("family operations agree with a pointwise oracle") {
  EPSetSampler sampler(2024);
  for (Family fam : {Family::A, Family::B, Family::C}) {
    for (EPSet const& x : {ep::finite({1, 3}), ep::finite({2, 4}), ep::odds(), ep::naturals()}) {
      auto const frame = family_frame(fam, x);
      auto const px = oracle::points(x, kN);
      for (int round = 0; round < 1500; ++round) {
        EPSet const s = sampler.next();
        EPSet const fs = frame.apply(s);
        CHECK(oracle::points(fs, kN) == oracle_apply(fam, oracle::points(s, kN), px));
      }
    }
  }
}

TEST_CASE("family operations stay inside the representable sets") {
  EPSetSampler sampler(99);
  auto const ax = family_frame(Family::A, ep::finite({1, 3}));
  for (int i = 0; i < 10000; ++i) {
    EPSet s = sampler.next();
    for (int k = 0; k < 3; ++k) s = ax.apply(s);
    CHECK(s.modulus() <= EPSet::kModulusCap);
  }
}
