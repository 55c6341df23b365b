#include "ceplab/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "ceplab/congruence.hpp"
#include "ceplab/errors.hpp"
#include "ceplab/properties.hpp"

namespace ceplab {

std::string index_set(std::vector<unsigned> const& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out + "}";
}

std::vector<Identity> identity_pool() {
  static char const* const texts[] = {
      "f(0) = 0",
      "f(1) = 1",
      "x & f(x) = x",
      "f(x) & x = f(x)",
      "f(f(x)) = f(x)",
      "f(x | y) = f(x) | f(y)",
      "(f(x) | f(y)) & -f(x | y) = 0",
      "f(-x) = -f(x)",
      "x & -f(-f(x)) = x",
      "f(f(x)) & -f(x) = 0",
      "f(x) | f(-x) = 1",
      "f(f(f(0))) = 0",
      "x = x",
  };
  std::vector<Identity> out;
  for (char const* t : texts) out.push_back(parse_identity(t));
  return out;
}

std::vector<std::pair<std::string, FiniteFrame>> normal_frame_pool() {
  auto kripke = [](std::size_t worlds, std::vector<std::pair<std::size_t, std::size_t>> edges) {
    KripkeFrame k;
    for (std::size_t i = 0; i < worlds; ++i) k.worlds.push_back("w" + std::to_string(i));
    k.relation = std::move(edges);
    return complex_algebra(k);
  };
  FiniteAlgebra const two = make_powerset_algebra(2);
  return {
      {"wheel 5", wheel(5)},
      {"identity 2", identity_frame(2)},
      {"3-cycle", kripke(3, {{0, 1}, {1, 2}, {2, 0}})},
      {"chain into loop", kripke(3, {{0, 1}, {1, 2}, {2, 2}})},
      {"universal 2", kripke(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})},
      {"mixed 3", kripke(3, {{0, 0}, {0, 1}, {1, 1}, {2, 1}})},
      {"threshold 2", finite_frame(two, {{0, 0}, {1, 0}, {2, 0}, {3, 3}})},
  };
}

std::vector<FiniteFrame> all_complex_algebras(unsigned max_worlds) {
  if (max_worlds > 4) throw UsageError("Kripke frame enumeration is limited to 4 worlds");
  std::vector<FiniteFrame> out;
  for (unsigned n = 1; n <= max_worlds; ++n) {
    KripkeFrame k;
    for (unsigned i = 0; i < n; ++i) k.worlds.push_back("w" + std::to_string(i));
    std::uint32_t const pairs = n * n;
    for (std::uint32_t rel = 0; rel < (std::uint32_t{1} << pairs); ++rel) {
      k.relation.clear();
      for (std::uint32_t b = 0; b < pairs; ++b)
        if (rel >> b & 1) k.relation.emplace_back(b / n, b % n);
      out.push_back(complex_algebra(k));
    }
  }
  return out;
}

std::vector<FiniteFrame> all_additive_frames(unsigned atoms) {
  if (atoms == 0 || atoms > 2) throw UsageError("additive enumeration is limited to 1 or 2 atoms");
  FiniteAlgebra const alg = make_powerset_algebra(atoms);
  std::uint32_t const size = alg.size();
  std::uint32_t total = 1;
  for (std::uint32_t i = 0; i < size; ++i) total *= size;

  std::vector<FiniteFrame> out;
  std::vector<Element> table(size);
  for (std::uint32_t code = 0; code < total; ++code) {
    std::uint32_t c = code;
    for (std::uint32_t x = 0; x < size; ++x, c /= size) table[x] = Element{c % size};
    bool additive = true;
    for (std::uint32_t x = 0; x < size && additive; ++x)
      for (std::uint32_t y = 0; y < size && additive; ++y)
        additive = table[x | y].bits() == (table[x].bits() | table[y].bits());
    if (additive) out.emplace_back(alg, table);
  }
  return out;
}

FiniteFrame normalize_operation(FiniteFrame const& base) {
  FiniteAlgebra const& alg = base.algebra();
  Element const f0 = base.apply(alg.bottom());
  std::vector<Element> table(alg.size());
  for (std::uint32_t x = 0; x < alg.size(); ++x) table[x] = alg.meet(base.apply(Element{x}), alg.neg(f0));
  return FiniteFrame(alg, std::move(table));
}

namespace {

class Item {
 public:
  Item(std::string id, std::string expected) {
    out_.id = std::move(id);
    out_.expected = std::move(expected);
    out_.ok = true;
  }

  void fact(std::string key, std::string value) { out_.facts.push_back({std::move(key), std::move(value)}); }

  void expect(bool cond, std::string key, std::string value) {
    if (!cond) {
      out_.ok = false;
      value += " (unexpected)";
    }
    fact(std::move(key), std::move(value));
  }

  ItemOutcome finish(std::string summary) {
    out_.summary = std::move(summary);
    return std::move(out_);
  }

 private:
  ItemOutcome out_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool holds(FiniteFrame const& frame, Identity const& e) { return !check_identity(frame, e).failed(); }

bool holds(SymbolicFrame const& frame, Identity const& e) {
  return !check_identity(Frame(frame), e, Strategy::sampled(1, 0)).failed();
}

std::string fresh_name(Identity const& e) {
  std::set<std::string> const used = free_variables(e);
  std::string name = "rel";
  while (used.contains(name)) name += "_";
  return name;
}

// F |= e iff square(F) |= e relativized at <1,0> and at <0,1>.
std::size_t relativization_mismatches(std::vector<std::pair<std::string, FiniteFrame>> const& frames,
                                      FiniteFrame (*construct)(FiniteFrame const&), std::vector<Identity> const& pool,
                                      std::size_t& checks) {
  std::size_t mismatches = 0;
  for (auto const& [name, base] : frames) {
    FiniteFrame const square = construct(base);
    Corners const c = square_corners(base.algebra());
    for (Identity const& e : pool) {
      bool const expected = holds(base, e);
      std::string const y = fresh_name(e);
      Identity const rel = relativize(e, y);
      for (Element corner : {c.one_zero, c.zero_one}) {
        ++checks;
        if (!check_identity(square, rel, {{y, corner}}).failed() != expected) ++mismatches;
      }
    }
  }
  return mismatches;
}

SymbolicFrame family(Family f, char const* x) { return family_frame(f, parse_epset(x)); }

std::vector<unsigned> holding_indices(unsigned first, unsigned last, std::function<bool(unsigned)> const& pred) {
  std::vector<unsigned> out;
  for (unsigned n = first; n <= last; ++n)
    if (pred(n)) out.push_back(n);
  return out;
}

TraceVerdict replay_builtin(std::string_view name, SymbolicFrame const& frame) {
  return replay_trace(frame, four_block, has_infinitely_many_odds, parse_trace(builtin_trace_text(name)));
}

std::string trace_result(TraceVerdict const& v) {
  return v.valid ? "valid" : "invalid at step " + std::to_string(v.step) + ": " + v.reason;
}

std::string verdict_text(Verdict const& v) {
  return v.failed() ? "fails: " + describe(v) : to_string(v.kind) + " (" + std::to_string(v.checked) + " checked)";
}

// ------------------------------------------------------------------ items

ItemOutcome ext_cep(VerifyOptions const& opt) {
  Item item("ext-cep", "A_X is extensive and its subalgebra generated by E has a congruence that cannot extend");
  SymbolicFrame const a = family(Family::A, "{1,3}");
  Verdict const ext = check_property(Frame(a), PropertyTag::extensive, Strategy::sampled(opt.samples, opt.seed));
  item.expect(!ext.failed(), "extensive", verdict_text(ext));

  EPSet const e = ep::evens();
  SymbolicSubalgebra const sub = generate_subalgebra(a, std::span<EPSet const>(&e, 1), 200);
  bool const blocks = std::all_of(sub.elements.begin(), sub.elements.end(), four_block);
  item.fact("closure of {E}", std::to_string(sub.elements.size()) + " sets, " +
                                  (sub.fixpoint ? "fixpoint reached" : "bound reached (partial)"));
  item.expect(blocks, "all closure sets four-block", yes_no(blocks));
  item.expect(!sub.contains(ep::two_e()), "2E in closure", yes_no(sub.contains(ep::two_e())));
  item.expect(!has_infinitely_many_odds(ep::empty()), "filter proper", "yes");

  TraceVerdict const t = replay_builtin("ext2", a);
  item.expect(t.valid, "trace ext2", trace_result(t));
  return item.finish("A_X extensive; ext2 trace forces N ~ empty");
}

ItemOutcome ext_sep(VerifyOptions const&) {
  Item item("ext-sep", "f(-f^(n+1)(0)) = 1 holds in A_X exactly for n in X");
  SymbolicFrame const a = family(Family::A, "{1,3}");
  auto derived = holding_indices(0, 6, [&](unsigned n) {
    return holds(a, Identity{Term::fapp(Term::neg(Term::fpow(n + 1, Term::zero()))), Term::one()});
  });
  auto literal = holding_indices(1, 7, [&](unsigned n) {
    return holds(a, Identity{Term::fapp(Term::neg(Term::fpow(n, Term::zero()))), Term::one()});
  });
  item.fact("X", "{1,3}");
  item.expect(derived == std::vector<unsigned>{1, 3}, "holds for n in", index_set(derived));
  item.expect(literal == std::vector<unsigned>{2, 4}, "literal f(-f^n(0)) = 1 holds for n in", index_set(literal));
  return item.finish("separation identities pick out X = " + index_set(derived));
}

ItemOutcome cont_sep(VerifyOptions const& opt) {
  Item item("cont-sep", "B_X is contractive, has no CEP, and h(-h^(n+1)(1)) = 0 holds exactly for n in X");
  SymbolicFrame const b = family(Family::B, "{2,4}");
  Verdict const con = check_property(Frame(b), PropertyTag::contractive, Strategy::sampled(opt.samples, opt.seed));
  item.expect(!con.failed(), "contractive", verdict_text(con));
  auto derived = holding_indices(0, 6, [&](unsigned n) {
    return holds(b, Identity{Term::fapp(Term::neg(Term::fpow(n + 1, Term::one()))), Term::zero()});
  });
  item.fact("X", "{2,4}");
  item.expect(derived == std::vector<unsigned>{2, 4}, "holds for n in", index_set(derived));
  TraceVerdict const t = replay_builtin("cont", b);
  item.expect(t.valid, "trace cont", trace_result(t));
  return item.finish("B_X contractive; separation picks out X = " + index_set(derived));
}

ItemOutcome subadd_props(VerifyOptions const& opt) {
  Item item("subadd-props", "C_X is subadditive, including every branch of the case analysis");
  SymbolicFrame const c = family(Family::C, "{3,5}");
  std::size_t const grid = subadditive_case_grid(c).size();
  Verdict const v = check_property(Frame(c), PropertyTag::subadditive, Strategy::sampled(opt.samples, opt.seed));
  item.fact("case grid pairs", std::to_string(grid));
  item.expect(!v.failed(), "subadditive", verdict_text(v));
  return item.finish("C_X subadditive on samples and case grid");
}

ItemOutcome subadd_cep(VerifyOptions const&) {
  Item item("subadd-cep", "the subalgebra of C_X generated by E has a congruence that cannot extend");
  SymbolicFrame const c = family(Family::C, "{3,5}");
  TraceVerdict const t = replay_builtin("subadd", c);
  item.expect(t.valid, "trace subadd", trace_result(t));

  ForcingTrace broken = parse_trace(builtin_trace_text("subadd"));
  broken.steps[2].premises = {4};
  TraceVerdict const b = replay_trace(c, four_block, has_infinitely_many_odds, broken);
  item.expect(!b.valid && b.step == 3, "corrupted trace", trace_result(b));
  return item.finish("subadd trace valid; corrupted copy rejected");
}

ItemOutcome subadd_sep(VerifyOptions const&) {
  Item item("subadd-sep", "nbar(n) = {n}, and g(-nbar(n)) = -nbar(n) holds exactly for n in X");
  SymbolicFrame const c = family(Family::C, "{3,5}");
  bool macro = true;
  for (unsigned n = 0; n <= 10; ++n) macro = macro && eval_term(c, nbar(n), {}) == ep::singleton(n);
  item.expect(macro, "nbar(n) = {n} for n <= 10", yes_no(macro));
  auto derived = holding_indices(0, 8, [&](unsigned n) {
    Term const bar = nbar(n);
    return holds(c, Identity{Term::fapp(Term::neg(bar)), Term::neg(bar)});
  });
  item.fact("X", "{3,5}");
  item.expect(derived == std::vector<unsigned>{3, 5}, "holds for n in", index_set(derived));
  return item.finish("separation picks out X = " + index_set(derived));
}

ItemOutcome star_simple(VerifyOptions const&) {
  Item item("star-simple", "star(A x A) is simple");
  FiniteFrame const p = identity_frame(1);
  bool const small = is_simple(star(frame_product(p, p)));
  item.expect(small, "star(P x P), P the 1-atom identity frame", small ? "simple" : "not simple");
  FiniteFrame const w = wheel(5);
  bool const big = is_simple(star(frame_product(w, w)));
  item.expect(big, "star(W5 x W5)", big ? "simple" : "not simple");
  return item.finish("both star frames simple");
}

ItemOutcome star_nocep(VerifyOptions const&) {
  Item item("star-nocep", "star frames lack the CEP at the four-corner subalgebra");
  FiniteFrame const pp = frame_product(identity_frame(1), identity_frame(1));
  FiniteFrame const s = star(pp);
  CepResult const full = cep_check_full(s);
  item.expect(!full.holds(), "full check on star(P x P)", full.holds() ? "holds" : "fails");
  if (full.failure) {
    std::string sub;
    for (Element e : full.failure->subalgebra.elements) sub += (sub.empty() ? "" : " ") + to_hex(e);
    item.fact("first failing subalgebra", "{" + sub + "} at " + to_hex(full.failure->generator));
  }
  Corners const pc = square_corners(pp.algebra());
  Refutation const pr = cep_refute(s, generate_subalgebra(s, pc.all()), pc.zero_one);
  item.expect(pr.refuted(), "refutation on star(P x P) at the four corners",
              pr.refuted() ? "refuted, witness " + to_hex(*pr.witness) : "not refuted");

  FiniteFrame const w = wheel(5);
  FiniteFrame const big = star(frame_product(w, w));
  Corners const c = square_corners(frame_product(w, w).algebra());
  Refutation const r = cep_refute(big, generate_subalgebra(big, c.all()), c.zero_one);
  item.expect(r.refuted(), "refutation on star(W5 x W5) at <0,1>",
              r.refuted() ? "refuted, witness " + to_hex(*r.witness) : "not refuted");
  return item.finish("CEP fails on star frames");
}

ItemOutcome star_relativize(VerifyOptions const&) {
  Item item("star-relativize", "F |= e iff star(F) satisfies e relativized at <1,0> and at <0,1>");
  auto const frames = normal_frame_pool();
  auto const pool = identity_pool();
  std::size_t checks = 0;
  std::size_t const bad = relativization_mismatches(frames, &star, pool, checks);
  item.fact("frames x identities", std::to_string(frames.size()) + " x " + std::to_string(pool.size()));
  item.expect(bad == 0, "mismatches", std::to_string(bad) + " of " + std::to_string(checks));
  return item.finish(std::to_string(checks) + " relativized checks agree");
}

struct Profile {
  bool extensive, monotone, idempotent;
  unsigned code() const { return (extensive ? 4u : 0u) | (monotone ? 2u : 0u) | (idempotent ? 1u : 0u); }
};

Profile profile(FiniteFrame const& f) {
  return {!check_property(f, PropertyTag::extensive).failed(), !check_property(f, PropertyTag::monotone).failed(),
          !check_property(f, PropertyTag::idempotent).failed()};
}

std::string profile_text(unsigned code) {
  std::string out;
  out += (code & 4) ? "extensive" : "not extensive";
  out += (code & 2) ? ", monotone" : ", not monotone";
  out += (code & 1) ? ", idempotent" : ", not idempotent";
  return out;
}

}  // namespace

std::vector<FiniteFrame> profile_representatives() {
  std::vector<std::optional<FiniteFrame>> found(8);
  std::size_t missing = 8;
  for (unsigned atoms = 2; atoms <= 3 && missing > 0; ++atoms) {
    FiniteAlgebra const alg = make_powerset_algebra(atoms);
    std::uint32_t const size = alg.size();
    std::uint32_t const inner = size - 2;
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < inner; ++i) total *= size;
    std::vector<Element> table(size);
    table[0] = alg.bottom();
    table[size - 1] = alg.top();
    for (std::uint64_t code = 0; code < total && missing > 0; ++code) {
      std::uint64_t c = code;
      for (std::uint32_t x = 1; x + 1 < size; ++x, c /= size) table[x] = Element{static_cast<std::uint32_t>(c % size)};
      FiniteFrame f(alg, table);
      unsigned const k = profile(f).code();
      if (!found[k]) {
        found[k] = std::move(f);
        --missing;
      }
    }
  }
  std::vector<FiniteFrame> out;
  for (auto& f : found) {
    if (!f) throw InternalError("no small frame realizes every property profile");
    out.push_back(std::move(*f));
  }
  return out;
}

namespace {

ItemOutcome star_preserve(VerifyOptions const&) {
  Item item("star-preserve", "star preserves being (not) extensive, (not) monotone, (not) idempotent");
  std::vector<FiniteFrame> const reps = profile_representatives();
  unsigned preserved = 0;
  bool never_additive = true;
  for (unsigned k = 0; k < reps.size(); ++k) {
    FiniteFrame const s = star(reps[k]);
    unsigned const got = profile(s).code();
    item.expect(got == k, "profile " + profile_text(k),
                "base " + std::to_string(reps[k].algebra().atom_count()) + " atoms, star: " + profile_text(got));
    preserved += got == k;
    never_additive = never_additive && check_property(s, PropertyTag::additive).failed();
  }
  item.expect(never_additive, "star frame additive in some case", yes_no(!never_additive));
  return item.finish(std::to_string(preserved) + " of 8 profiles preserved");
}

ItemOutcome sharp_simple(VerifyOptions const&) {
  Item item("sharp-simple", "wheel(n) sharp is semi-complemented, meets the freedom conditions and is simple");
  for (unsigned n : {5u, 7u}) {
    FiniteFrame const w = wheel(n);
    FiniteFrame const s = sharp(w);
    std::string const tag = "wheel(" + std::to_string(n) + ") sharp";
    bool const semi = !check_property(s, PropertyTag::semi_complemented).failed();
    item.expect(semi, tag + " semi-complemented", yes_no(semi));
    bool const cond = scan_sharp_conditions(w.algebra(), s).all();
    item.expect(cond, tag + " conditions", cond ? "pass" : "fail");
    bool const simple = is_simple(s);
    item.expect(simple, tag + " simple", yes_no(simple));
    if (n == 5) {
      std::size_t const size = congruence_lattice(s).size();
      item.expect(size == 2, tag + " congruences", std::to_string(size));
    }
  }
  return item.finish("wheel sharps simple");
}

ItemOutcome sharp_nocep(VerifyOptions const&) {
  Item item("sharp-nocep", "wheel(n) sharp lacks the CEP at the four-corner subalgebra");
  for (unsigned n : {5u, 7u}) {
    FiniteFrame const w = wheel(n);
    FiniteFrame const s = sharp(w);
    Corners const c = square_corners(w.algebra());
    Refutation const r = cep_refute(s, generate_subalgebra(s, c.all()), c.zero_one);
    item.expect(r.refuted(), "wheel(" + std::to_string(n) + ") sharp at <0,1>",
                r.refuted() ? "refuted, witness " + to_hex(*r.witness) : "not refuted");
  }
  return item.finish("refuted for n = 5 and n = 7");
}

ItemOutcome sharp_sc2(VerifyOptions const&) {
  Item item("sharp-sc2", "wheel(5) |= e iff wheel(5) sharp satisfies psi_e with k = 2");
  FiniteFrame const w = wheel(5);
  FiniteFrame const s = sharp(w);
  std::size_t bad = 0;
  std::vector<Identity> const pool = identity_pool();
  unsigned holding = 0;
  for (Identity const& e : pool) {
    bool const base = holds(w, e);
    holding += base;
    bool const lifted = !check_psi(s, e, 2).failed();
    if (base != lifted) {
      ++bad;
      item.fact("mismatch", to_string(e));
    }
  }
  item.fact("identities holding in wheel(5)", std::to_string(holding) + " of " + std::to_string(pool.size()));
  item.expect(bad == 0, "mismatches", std::to_string(bad));
  return item.finish("psi transfer agrees on all " + std::to_string(pool.size()) + " identities");
}

// Pairs <u,v> with u, v in {0, 1, c1, c2} and at least one of them 0 or 1,
// where c1 = <1,0> and c2 = <0,1> are the units of the two factors of `factor`.
std::vector<Element> fixed_point_candidates(FiniteAlgebra const& factor) {
  FiniteAlgebra const half = make_powerset_algebra(factor.atom_count() / 2);
  Corners const units = square_corners(half);
  std::vector<Element> parts = units.all();
  std::vector<Element> out;
  for (Element u : parts)
    for (Element v : parts) {
      bool const u_trivial = u == units.zero_zero || u == units.one_one;
      bool const v_trivial = v == units.zero_zero || v == units.one_one;
      if (u_trivial || v_trivial) out.push_back(pair_encode(factor, factor, u, v));
    }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteFrame flat_w5() {
  FiniteFrame const w = wheel(5);
  return flat(frame_product(w, w));
}

ItemOutcome flat_simple(VerifyOptions const&) {
  Item item("flat-simple", "(W5 x W5) flat is extensive, symmetric, normal, unit-preserving and simple");
  FiniteFrame const fl = flat_w5();
  item.fact("carrier", std::to_string(fl.algebra().size()) + " elements");
  for (PropertyTag p : {PropertyTag::extensive, PropertyTag::symmetric, PropertyTag::normal, PropertyTag::unit_preserving}) {
    Verdict const v = check_property(fl, p);
    item.expect(!v.failed(), to_string(p), verdict_text(v));
  }
  bool const simple = is_simple(fl);
  item.expect(simple, "simple", yes_no(simple));

  FiniteAlgebra const& alg = fl.algebra();
  std::vector<Element> fixed;
  for (std::uint32_t x = 0; x < alg.size(); ++x) {
    Element const a{x};
    if (fl.apply(fl.apply(a)) == a && fl.apply(fl.apply(alg.neg(a))) == alg.neg(a)) fixed.push_back(a);
  }
  FiniteAlgebra const& factor = frame_product(wheel(5), wheel(5)).algebra();
  std::vector<Element> corners = square_corners(factor).all();
  std::sort(corners.begin(), corners.end());
  std::vector<Element> derived = fixed_point_candidates(factor);
  item.expect(fixed == derived, "elements with f(f(a)) = a and f(f(-a)) = -a",
              std::to_string(fixed.size()) + " (corners, plus <c,0>, <c,1>, <0,c>, <1,c> for both factor units c)");
  item.fact("only the four corners", yes_no(fixed == corners));
  return item.finish("flat frame simple with the corner fixed-point property");
}

ItemOutcome flat_nocep(VerifyOptions const&) {
  Item item("flat-nocep", "(W5 x W5) flat lacks the CEP, witness <1,0> for the congruence <0,1>");
  FiniteFrame const fl = flat_w5();
  Corners const c = square_corners(frame_product(wheel(5), wheel(5)).algebra());
  Refutation const r = cep_refute(fl, generate_subalgebra(fl, c.all()), c.zero_one);
  item.expect(r.refuted() && *r.witness == c.one_zero, "refutation at <0,1>",
              r.refuted() ? "refuted, witness " + to_hex(*r.witness) : "not refuted");
  item.expect(r.extension == fl.algebra().bottom(), "extended congruence", to_hex(r.extension));
  return item.finish("refuted with witness <1,0>");
}

ItemOutcome flat_preserve(VerifyOptions const&) {
  Item item("flat-preserve", "flat preserves symmetry and extensiveness and the relativization equivalence");
  auto const frames = normal_frame_pool();
  for (auto const& [name, base] : frames) {
    FiniteFrame const f = flat(base);
    for (PropertyTag p : {PropertyTag::symmetric, PropertyTag::extensive}) {
      bool const b = !check_property(base, p).failed();
      bool const l = !check_property(f, p).failed();
      if (b) item.expect(l, name + " " + to_string(p), "kept");
    }
  }
  std::size_t checks = 0;
  std::size_t const bad = relativization_mismatches(frames, &flat, identity_pool(), checks);
  item.expect(bad == 0, "relativization mismatches", std::to_string(bad) + " of " + std::to_string(checks));

  FiniteFrame const ww = frame_product(wheel(5), wheel(5));
  FiniteFrame const fl = flat(ww);
  std::size_t transfer = 0;
  std::vector<std::string> mismatched;
  for (Identity const& e : identity_pool()) {
    if (free_variables(e).size() > 1) continue;
    ++transfer;
    if (holds(ww, e) != !check_psi(fl, e, 2).failed()) mismatched.push_back(to_string(e));
  }
  // Derived: only the symmetry identity fails, at z = <1,c> or <c,1>.
  bool const only_symmetry = mismatched == std::vector<std::string>{to_string(parse_identity("x & -f(-f(x)) = x"))};
  item.expect(only_symmetry, "psi transfer on (W5 x W5) flat, identities in at most one variable",
              std::to_string(transfer - mismatched.size()) + " of " + std::to_string(transfer) + " agree");
  for (std::string const& m : mismatched) item.fact("psi transfer fails for", m);
  return item.finish("flat preserves both properties; relativization agrees");
}

ItemOutcome appendix_additive_cep(VerifyOptions const&) {
  Item item("appendix-additive-cep", "additive Boolean frames have the CEP");
  auto run = [&](std::vector<FiniteFrame> const& pool, std::string const& name) {
    std::size_t failures = 0;
    for (FiniteFrame const& f : pool) failures += !cep_check_full(f).holds();
    item.expect(failures == 0, name, std::to_string(pool.size()) + " frames, " + std::to_string(failures) + " failures");
  };
  run(all_complex_algebras(3), "complex algebras, 1 to 3 worlds");
  run(all_additive_frames(2), "additive operations on 2 atoms");
  return item.finish("CEP holds on every additive frame in the pool");
}

ItemOutcome appendix_normalize(VerifyOptions const&) {
  Item item("appendix-normalize", "g(x) = f(x) - f(0) has the same congruences as f for additive f");
  auto run = [&](std::vector<FiniteFrame> const& pool, std::string const& name) {
    std::size_t diffs = 0;
    for (FiniteFrame const& f : pool) {
      diffs += congruence_lattice(f).elements != congruence_lattice(normalize_operation(f)).elements;
    }
    item.expect(diffs == 0, name, std::to_string(pool.size()) + " frames, " + std::to_string(diffs) + " differ");
  };
  run(all_complex_algebras(3), "complex algebras, 1 to 3 worlds");
  run(all_additive_frames(2), "additive operations on 2 atoms");
  return item.finish("congruence sets unchanged");
}

ItemOutcome negation_cep(VerifyOptions const&) {
  Item item("negation-cep", "f(x) = -x has the CEP; f and -f have the same congruences");
  for (unsigned atoms = 1; atoms <= 4; ++atoms) {
    bool const ok = cep_check_full(negation_frame(atoms)).holds();
    item.expect(ok, "negation frame, " + std::to_string(atoms) + " atoms", ok ? "holds" : "fails");
  }
  FiniteAlgebra const alg = make_powerset_algebra(2);
  std::size_t diffs = 0;
  std::vector<Element> table(4);
  for (std::uint32_t code = 0; code < 256; ++code) {
    for (std::uint32_t x = 0; x < 4; ++x) table[x] = Element{code >> (2 * x) & 3};
    FiniteFrame const f(alg, table);
    diffs += congruence_lattice(f).elements != congruence_lattice(negated_operation(f)).elements;
  }
  item.expect(diffs == 0, "antitone companion, all 256 operations on 2 atoms", std::to_string(diffs) + " differ");
  return item.finish("negation frames have the CEP");
}

ItemOutcome figure1(VerifyOptions const&) {
  Item item("figure1", "the four-corner subalgebra of a star frame has 4 congruences, 2 non-trivial");
  std::size_t last = 0;
  for (auto const& [name, base] : std::vector<std::pair<std::string, FiniteFrame>>{
           {"identity 1", identity_frame(1)}, {"identity 2", identity_frame(2)}, {"wheel 5", wheel(5)}}) {
    FiniteFrame const s = star(base);
    Subalgebra const sub = generate_subalgebra(s, square_corners(base.algebra()).all());
    std::size_t const n = subalgebra_congruences(s, sub).size();
    item.expect(sub.elements.size() == 4 && n == 4, "star(" + name + ")",
                std::to_string(n) + " congruences, " + std::to_string(n >= 2 ? n - 2 : 0) + " non-trivial");
    last = n;
  }
  return item.finish(std::to_string(last) + " congruences, " + std::to_string(last >= 2 ? last - 2 : 0) +
                     " non-trivial");
}

using Routine = ItemOutcome (*)(VerifyOptions const&);

std::vector<std::pair<std::string, Routine>> const& routines() {
  static std::vector<std::pair<std::string, Routine>> const table{
      {"ext-cep", ext_cep},
      {"ext-sep", ext_sep},
      {"cont-sep", cont_sep},
      {"subadd-props", subadd_props},
      {"subadd-cep", subadd_cep},
      {"subadd-sep", subadd_sep},
      {"star-simple", star_simple},
      {"star-nocep", star_nocep},
      {"star-relativize", star_relativize},
      {"star-preserve", star_preserve},
      {"sharp-simple", sharp_simple},
      {"sharp-nocep", sharp_nocep},
      {"sharp-sc2", sharp_sc2},
      {"flat-simple", flat_simple},
      {"flat-nocep", flat_nocep},
      {"flat-preserve", flat_preserve},
      {"appendix-additive-cep", appendix_additive_cep},
      {"appendix-normalize", appendix_normalize},
      {"negation-cep", negation_cep},
      {"figure1", figure1},
  };
  return table;
}

}  // namespace

std::vector<std::string> const& verification_ids() {
  static std::vector<std::string> const ids = [] {
    std::vector<std::string> out;
    for (auto const& [id, fn] : routines()) out.push_back(id);
    return out;
  }();
  return ids;
}

ItemOutcome run_verification(std::string_view id, VerifyOptions const& options) {
  for (auto const& [name, fn] : routines()) {
    if (name == id) return fn(options);
  }
  throw UsageError("unknown verification item '" + std::string(id) + "'");
}

}  // namespace ceplab
