#include <doctest.h>

#include <functional>

#include "ceplab/errors.hpp"
#include "ceplab/periodic.hpp"
#include "oracles.hpp"

using namespace ceplab;
using oracle::points;

TEST_CASE("make_periodic") {
  CHECK(make_periodic(2, {0}) == ep::evens());
  CHECK(make_periodic(4, {0}) == ep::two_e());
  CHECK(make_periodic(1, {}, {{0, true}, {1, true}, {2, true}}) == ep::finite({0, 1, 2}));
  CHECK_THROWS_AS(make_periodic(2, {2}), UsageError);
  auto const s = make_periodic(6, {0, 2, 4}, {{3, true}});
  CHECK(s.modulus() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(5));
}

TEST_CASE("boolean operations on periodic sets") {
  CHECK(ep_neg(ep::evens()) == ep::odds());
  CHECK(ep_meet(ep::evens(), ep::two_e()) == ep::two_e());
  CHECK(ep_bicond(ep::evens(), ep::empty()) == ep::odds());
  CHECK(points(ep_bicond(ep::evens(), ep::empty())) == points(ep::odds()));
  CHECK(ep_equal(ep_join(ep::two_e(), ep_neg(ep::evens())), ep_join(ep_neg(ep::evens()), ep::two_e())));
}

TEST_CASE("membership") {
  CHECK(ep_membership(ep::two_e(), 8));
  CHECK_FALSE(ep_membership(ep::two_e(), 2));
  CHECK(ep_membership(ep::odds(), 7));
}

TEST_CASE("equality across moduli") {
  CHECK(ep_equal(ep::evens(), make_periodic(4, {0, 2})));
  CHECK_FALSE(ep_equal(ep::evens(), ep::odds()));
}

TEST_CASE("classify") {
  using V = CaseTag::Variant;
  auto const seg = classify(ep::finite({0, 1, 2}));
  CHECK(seg.variant == V::initial_segment);
  CHECK(seg.value == 3);
  auto const estar = ep_join(ep_meet(ep::evens(), ep_neg(ep::singleton(2))), ep::singleton(5));
  CHECK(classify(estar).variant == V::e_star);
  auto const cos = classify(ep_neg(ep::singleton(3)));
  CHECK(cos.variant == V::co_singleton);
  CHECK(cos.value == 3);
  CHECK(classify(ep::two_e()).variant == V::two_e);
  CHECK_FALSE(in_e_star(ep::two_e()));
  CHECK(classify(ep::empty()).variant == V::empty);
  CHECK(classify(ep::finite({2, 7})).variant == V::finite);
  CHECK(classify(ep::finite({2, 7})).value == 7);
  CHECK(classify(ep_neg(ep::initial_segment(3))).variant == V::co_initial_segment);
}

TEST_CASE("literal syntax round trip") {
  for (char const* text : {"empty", "N", "E", "O", "2E", "{1,2,3}", "co{3}", "periodic m=3 r=0,2 except=+1,-3"}) {
    auto const s = parse_epset(text);
    CHECK(parse_epset(to_string(s)) == s);
  }
  CHECK(parse_epset("periodic m=3 r=0,2 except=+1,-3").contains(1));
  CHECK_FALSE(parse_epset("periodic m=3 r=0,2 except=+1,-3").contains(3));
  CHECK_THROWS_AS(parse_epset("{1,"), SyntaxError);
}

TEST_CASE("operations agree with pointwise evaluation") {
  EPSetSampler sampler(7);
  std::function<bool(bool, bool)> const fns[] = {
      [](bool a, bool b) { return a && b; }, [](bool a, bool b) { return a || b; },
      [](bool a, bool b) { return !a || b; }, [](bool a, bool b) { return a == b; }};
  BoolOp const ops[] = {BoolOp::meet, BoolOp::join, BoolOp::arrow, BoolOp::bicond};
  for (int round = 0; round < 300; ++round) {
    EPSet const a = sampler.next(), b = sampler.next();
    auto const pa = points(a), pb = points(b);
    for (int k = 0; k < 4; ++k) {
      EPSet const args[] = {a, b};
      auto const pr = points(ep_boolean_op(ops[k], args));
      bool ok = true;
      for (std::size_t n = 0; n < pa.size(); ++n) ok = ok && pr[n] == fns[k](pa[n], pb[n]);
      CHECK(ok);
    }
    auto const pn = points(ep_neg(a));
    bool ok = true;
    for (std::size_t n = 0; n < pa.size(); ++n) ok = ok && pn[n] != pa[n];
    CHECK(ok);
    CHECK(ep_leq(ep_meet(a, b), a));
  }
}

TEST_CASE("canonical form is stable under modulus inflation") {
  EPSetSampler sampler(11);
  for (int round = 0; round < 200; ++round) {
    EPSet const s = sampler.next();
    for (std::uint64_t k : {2u, 3u, 5u}) {
      std::uint64_t const m = s.modulus() * k;
      std::vector<std::uint64_t> residues;
      for (std::uint64_t r = 0; r < m; ++r)
        if (s.contains(r + 64 * m)) residues.push_back(r);
      std::map<std::uint64_t, bool> exc;
      for (std::uint64_t n = 0; n < 64; ++n) exc[n] = s.contains(n);
      CHECK(make_periodic(m, residues, exc) == s);
    }
  }
}

TEST_CASE("classification agrees with a pointwise oracle") {
  EPSetSampler sampler(3);
  for (unsigned shape = 0; shape < EPSetSampler::kShapeCount; ++shape) {
    for (int round = 0; round < 40; ++round) {
      EPSet const s = sampler.next_of_shape(shape);
      auto const p = points(s, 1200);
      bool tail_evens = true, tail_odds_absent = true, tail_odds = false, tail_any = false, tail_all = true;
      for (std::size_t n = 600; n < 1200; ++n) {
        tail_any = tail_any || p[n];
        tail_all = tail_all && p[n];
        if (n % 2 == 0) tail_evens = tail_evens && p[n];
        else if (p[n]) tail_odds_absent = false, tail_odds = true;
      }
      CHECK(s.is_finite() == !tail_any);
      CHECK(s.is_cofinite() == tail_all);
      CHECK(in_e_star(s) == (tail_evens && tail_odds_absent));
      CHECK(has_infinitely_many_odds(s) == tail_odds);
      auto const tag = classify(s);
      if (tag.variant == CaseTag::Variant::initial_segment) {
        for (std::size_t n = 0; n < 1200; ++n) CHECK(p[n] == (n < tag.value));
      }
      if (tag.variant == CaseTag::Variant::co_singleton) {
        for (std::size_t n = 0; n < 1200; ++n) CHECK(p[n] == (n != tag.value));
      }
    }
  }
}
