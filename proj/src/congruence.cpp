#include "ceplab/congruence.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "ceplab/errors.hpp"

namespace ceplab {

bool is_congruential(FiniteFrame const& frame, Element a) {
  FiniteAlgebra const& alg = frame.algebra();
  if (!alg.contains(a)) throw UsageError("element " + to_hex(a) + " is outside the carrier");
  std::uint32_t const bits = a.bits();
  std::span<Element const> const table = frame.table();
  for (std::uint32_t x = 0; x < alg.size(); ++x) {
    if (((table[x].bits() ^ table[x & bits].bits()) & bits) != 0) return false;
  }
  return true;
}

Element largest_congruential_below(FiniteFrame const& frame, Element c) {
  FiniteAlgebra const& alg = frame.algebra();
  if (!alg.contains(c)) throw UsageError("element " + to_hex(c) + " is outside the carrier");
  std::span<Element const> const table = frame.table();
  std::uint32_t a = c.bits();
  while (a != 0) {
    std::uint32_t diff = 0;
    for (std::uint32_t x = 0; x < alg.size(); ++x) {
      diff |= table[x].bits() ^ table[x & a].bits();
      if ((a & ~diff) == 0) break;
    }
    std::uint32_t const next = a & ~diff;
    if (next == a) break;
    a = next;
  }
  return Element{a};
}

std::size_t CongruenceLattice::nontrivial() const noexcept {
  return elements.size() >= 2 ? elements.size() - 2 : 0;
}

std::vector<std::pair<Element, Element>> CongruenceLattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  auto below = [](Element x, Element y) { return x != y && (x.bits() & ~y.bits()) == 0; };
  for (Element hi : elements) {
    for (Element lo : elements) {
      if (!below(lo, hi)) continue;
      bool between = false;
      for (Element mid : elements) {
        if (below(lo, mid) && below(mid, hi)) {
          between = true;
          break;
        }
      }
      if (!between) out.emplace_back(hi, lo);
    }
  }
  return out;
}

CongruenceLattice congruence_lattice(FiniteFrame const& frame) {
  FiniteAlgebra const& alg = frame.algebra();
  if (alg.size() > kLatticeCarrierCap) {
    throw ResourceError("congruence lattice needs a carrier of at most " + std::to_string(kLatticeCarrierCap) +
                        " elements (got " + std::to_string(alg.size()) +
                        "); use the simplicity check or a refutation witness instead");
  }
  CongruenceLattice lattice;
  for (std::uint32_t a = 0; a < alg.size(); ++a) {
    if (is_congruential(frame, Element{a})) lattice.elements.push_back(Element{a});
  }
  return lattice;
}

bool is_simple(FiniteFrame const& frame) {
  FiniteAlgebra const& alg = frame.algebra();
  for (Element c : enumerate(alg, Enumeration::coatoms)) {
    if (largest_congruential_below(frame, c) != alg.bottom()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- subalgebras

bool Subalgebra::contains(Element x) const { return std::binary_search(elements.begin(), elements.end(), x); }

Subalgebra generate_subalgebra(FiniteFrame const& frame, std::span<Element const> generators) {
  FiniteAlgebra const& alg = frame.algebra();
  std::vector<bool> seen(alg.size(), false);
  std::vector<Element> members;
  std::deque<Element> pending;
  auto add = [&](Element x) {
    if (seen[x.bits()]) return;
    seen[x.bits()] = true;
    pending.push_back(x);
  };
  add(alg.bottom());
  add(alg.top());
  for (Element g : generators) {
    if (!alg.contains(g)) throw UsageError("generator " + to_hex(g) + " is outside the carrier");
    add(g);
  }
  while (!pending.empty()) {
    Element const x = pending.front();
    pending.pop_front();
    members.push_back(x);
    add(alg.neg(x));
    add(frame.apply(x));
    for (std::size_t i = 0; i + 1 < members.size(); ++i) add(alg.meet(x, members[i]));
  }
  std::sort(members.begin(), members.end());
  return {std::move(members)};
}

bool SymbolicSubalgebra::contains(EPSet const& s) const {
  return std::binary_search(elements.begin(), elements.end(), s);
}

SymbolicSubalgebra generate_subalgebra(SymbolicFrame const& frame, std::span<EPSet const> generators,
                                       std::size_t bound) {
  std::set<EPSet> seen;
  std::vector<EPSet> members;
  std::deque<EPSet> pending;
  auto add = [&](EPSet const& x) {
    if (seen.insert(x).second) pending.push_back(x);
  };
  add(ep::empty());
  add(ep::naturals());
  for (EPSet const& g : generators) add(g);

  SymbolicSubalgebra out;
  out.fixpoint = true;
  while (!pending.empty()) {
    if (members.size() >= bound) {
      out.fixpoint = false;
      break;
    }
    EPSet const x = pending.front();
    pending.pop_front();
    members.push_back(x);
    add(ep_neg(x));
    add(frame.apply(x));
    for (std::size_t i = 0; i + 1 < members.size(); ++i) add(ep_meet(x, members[i]));
  }
  std::sort(members.begin(), members.end());
  out.elements = std::move(members);
  return out;
}

bool is_congruential_in(FiniteFrame const& frame, Subalgebra const& sub, Element a) {
  if (!sub.contains(a)) throw UsageError("element " + to_hex(a) + " is not in the subalgebra");
  FiniteAlgebra const& alg = frame.algebra();
  for (Element x : sub.elements) {
    if (alg.meet(frame.apply(x), a) != alg.meet(frame.apply(alg.meet(x, a)), a)) return false;
  }
  return true;
}

std::vector<Element> subalgebra_congruences(FiniteFrame const& frame, Subalgebra const& sub) {
  std::vector<Element> out;
  for (Element a : sub.elements)
    if (is_congruential_in(frame, sub, a)) out.push_back(a);
  return out;
}

namespace {

void require_cep_cap(FiniteFrame const& frame) {
  if (frame.algebra().size() > kCepCarrierCap) {
    throw ResourceError("full subalgebra enumeration needs a carrier of at most " + std::to_string(kCepCarrierCap) +
                        " elements (got " + std::to_string(frame.algebra().size()) +
                        "); use a refutation at a chosen subalgebra instead");
  }
}

std::optional<Element> refutation_witness(FiniteAlgebra const& alg, Subalgebra const& sub, Element a,
                                          Element extension) {
  std::optional<Element> witness;
  for (Element b : sub.elements) {
    if (alg.leq(extension, b) && !alg.leq(a, b)) witness = b;
  }
  return witness;
}

}  // namespace

std::vector<Subalgebra> all_subalgebras(FiniteFrame const& frame) {
  require_cep_cap(frame);
  FiniteAlgebra const& alg = frame.algebra();
  std::vector<Subalgebra> found{generate_subalgebra(frame, {})};
  std::set<std::vector<Element>> seen{found.front().elements};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::uint32_t x = 0; x < alg.size(); ++x) {
      if (found[i].contains(Element{x})) continue;
      std::vector<Element> gens = found[i].elements;
      gens.push_back(Element{x});
      Subalgebra next = generate_subalgebra(frame, gens);
      if (seen.insert(next.elements).second) found.push_back(std::move(next));
    }
  }
  return found;
}

CepResult cep_check_full(FiniteFrame const& frame) {
  FiniteAlgebra const& alg = frame.algebra();
  CepResult result;
  for (Subalgebra const& sub : all_subalgebras(frame)) {
    ++result.subalgebras;
    for (Element a : subalgebra_congruences(frame, sub)) {
      ++result.congruences;
      Element const extension = largest_congruential_below(frame, a);
      if (auto witness = refutation_witness(alg, sub, a, extension)) {
        result.failure = CepFailure{sub, a, *witness};
        return result;
      }
    }
  }
  return result;
}

Refutation cep_refute(FiniteFrame const& frame, Subalgebra const& sub, Element a) {
  if (!is_congruential_in(frame, sub, a)) {
    throw UsageError("element " + to_hex(a) + " is not congruential in the subalgebra");
  }
  Element const extension = largest_congruential_below(frame, a);
  return {extension, refutation_witness(frame.algebra(), sub, a, extension)};
}

// -------------------------------------------------------------------- traces

namespace {

std::vector<std::string> split_trace_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::string token;
    if (line[i] == '[') {
      std::size_t const close = line.find(']', i);
      if (close == std::string_view::npos) {
        throw SyntaxError("unterminated '[' on line " + std::to_string(line_no), i);
      }
      token = std::string(line.substr(i + 1, close - i - 1));
      i = close + 1;
    } else {
      int depth = 0;
      while (i < line.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(line[i])))) {
        if (line[i] == '{') ++depth;
        if (line[i] == '}') --depth;
        token += line[i++];
      }
    }
    out.push_back(std::move(token));
  }
  return out;
}

std::size_t parse_step_ref(std::string const& token, std::size_t line_no) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw UsageError("line " + std::to_string(line_no) + ": expected a step number, got '" + token + "'");
  }
  return std::stoul(token);
}

std::optional<BoolOp> parse_bool_op(std::string const& name) {
  for (BoolOp op : {BoolOp::meet, BoolOp::join, BoolOp::neg, BoolOp::arrow, BoolOp::bicond}) {
    if (to_string(op) == name) return op;
  }
  return std::nullopt;
}

std::string set_token(EPSet const& s) {
  std::string const text = to_string(s);
  return text.find(' ') == std::string::npos ? text : "[" + text + "]";
}

unsigned op_arity(BoolOp op) { return op == BoolOp::neg ? 1 : 2; }

}  // namespace

ForcingTrace parse_trace(std::string_view text) {
  ForcingTrace trace;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view const line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    std::vector<std::string> const tok = split_trace_line(line, line_no);
    if (tok.empty() || tok[0].starts_with('#')) continue;
    auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    auto need = [&](std::size_t n) {
      if (tok.size() != n) throw UsageError(where() + "'" + tok[0] + "' takes " + std::to_string(n - 1) + " arguments");
    };

    TraceStep step;
    std::string const& kw = tok[0];
    if (kw == "gen") {
      need(3);
      step.kind = TraceStep::Kind::gen;
      step.left = parse_epset(tok[1]);
      step.right = parse_epset(tok[2]);
    } else if (kw == "below") {
      need(4);
      if (tok[2] != "from") throw UsageError(where() + "expected 'below <set> from <step>'");
      step.kind = TraceStep::Kind::below;
      step.left = parse_epset(tok[1]);
      step.premises = {parse_step_ref(tok[3], line_no)};
    } else if (kw == "fstep") {
      need(2);
      step.kind = TraceStep::Kind::fstep;
      step.premises = {parse_step_ref(tok[1], line_no)};
    } else if (kw == "bool") {
      if (tok.size() < 3) throw UsageError(where() + "expected 'bool <op> <step>...'");
      auto op = parse_bool_op(tok[1]);
      if (!op) throw UsageError(where() + "unknown Boolean operation '" + tok[1] + "'");
      step.kind = TraceStep::Kind::boolean;
      step.op = *op;
      for (std::size_t i = 2; i < tok.size(); ++i) step.premises.push_back(parse_step_ref(tok[i], line_no));
      if (step.premises.size() != op_arity(*op)) {
        throw UsageError(where() + "'" + tok[1] + "' takes " + std::to_string(op_arity(*op)) + " premises");
      }
    } else if (kw == "trans") {
      need(3);
      step.kind = TraceStep::Kind::trans;
      step.premises = {parse_step_ref(tok[1], line_no), parse_step_ref(tok[2], line_no)};
    } else if (kw == "conclude") {
      need(1);
      step.kind = TraceStep::Kind::conclude;
    } else {
      throw UsageError(where() + "unknown step '" + kw + "'");
    }
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

std::string to_string(ForcingTrace const& trace) {
  std::ostringstream out;
  for (TraceStep const& s : trace.steps) {
    switch (s.kind) {
      case TraceStep::Kind::gen: out << "gen " << set_token(*s.left) << ' ' << set_token(*s.right); break;
      case TraceStep::Kind::below: out << "below " << set_token(*s.left) << " from " << s.premises.at(0); break;
      case TraceStep::Kind::fstep: out << "fstep " << s.premises.at(0); break;
      case TraceStep::Kind::boolean:
        out << "bool " << to_string(s.op);
        for (std::size_t p : s.premises) out << ' ' << p;
        break;
      case TraceStep::Kind::trans: out << "trans " << s.premises.at(0) << ' ' << s.premises.at(1); break;
      case TraceStep::Kind::conclude: out << "conclude"; break;
    }
    out << '\n';
  }
  return out.str();
}

bool four_block(EPSet const& s) { return s.modulus() <= 2; }

TraceVerdict replay_trace(SymbolicFrame const& frame, SetPredicate const& in_subalgebra,
                          SetPredicate const& in_filter, ForcingTrace const& trace) {
  TraceVerdict v;
  auto fail = [&](std::size_t step, std::string reason) {
    v.valid = false;
    v.step = step;
    v.reason = std::move(reason);
    return v;
  };

  if (in_filter(ep::empty())) return fail(0, "the filter contains the empty set, so the base congruence is total");

  // derived[i] is the pair proved at step i+1; conclude steps prove nothing.
  std::vector<std::optional<std::pair<EPSet, EPSet>>> derived;
  bool concluded = false;
  EPSet const top = ep::naturals();
  EPSet const bottom = ep::empty();

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    std::size_t const n = i + 1;
    TraceStep const& s = trace.steps[i];
    if (concluded) return fail(n, "step after conclude");

    std::vector<std::pair<EPSet, EPSet> const*> prem;
    for (std::size_t p : s.premises) {
      if (p == 0 || p >= n) return fail(n, "premise " + std::to_string(p) + " is not an earlier step");
      if (!derived[p - 1]) return fail(n, "premise " + std::to_string(p) + " derives no pair");
      prem.push_back(&*derived[p - 1]);
    }

    std::optional<std::pair<EPSet, EPSet>> out;
    switch (s.kind) {
      case TraceStep::Kind::gen: {
        EPSet const& x = *s.left;
        EPSet const& y = *s.right;
        if (!in_subalgebra(x)) return fail(n, to_string(x) + " is not in the subalgebra");
        if (!in_subalgebra(y)) return fail(n, to_string(y) + " is not in the subalgebra");
        if (!in_filter(ep_bicond(x, y))) {
          return fail(n, "biconditional " + to_string(ep_bicond(x, y)) + " is not in the filter");
        }
        out.emplace(x, y);
        break;
      }
      case TraceStep::Kind::below: {
        auto const& [p, q] = *prem[0];
        EPSet const* zeroed = nullptr;
        if (q == bottom) zeroed = &p;
        else if (p == bottom) zeroed = &q;
        if (zeroed == nullptr) return fail(n, "premise does not relate a set to the empty set");
        if (!ep_leq(*s.left, *zeroed)) return fail(n, to_string(*s.left) + " is not below " + to_string(*zeroed));
        out.emplace(*s.left, bottom);
        break;
      }
      case TraceStep::Kind::fstep:
        out.emplace(frame.apply(prem[0]->first), frame.apply(prem[0]->second));
        break;
      case TraceStep::Kind::boolean: {
        std::vector<EPSet> lhs, rhs;
        for (auto const* p : prem) {
          lhs.push_back(p->first);
          rhs.push_back(p->second);
        }
        out.emplace(ep_boolean_op(s.op, lhs), ep_boolean_op(s.op, rhs));
        break;
      }
      case TraceStep::Kind::trans: {
        auto const& [a, b] = *prem[0];
        auto const& [c, d] = *prem[1];
        if (b == c) out.emplace(a, d);
        else if (b == d) out.emplace(a, c);
        else if (a == c) out.emplace(b, d);
        else if (a == d) out.emplace(b, c);
        else return fail(n, "premises share no set");
        break;
      }
      case TraceStep::Kind::conclude: {
        if (derived.empty() || !derived.back()) return fail(n, "nothing to conclude from");
        auto const& [x, y] = *derived.back();
        if (!((x == top && y == bottom) || (x == bottom && y == top))) {
          return fail(n, "last pair is " + to_string(x) + " ~ " + to_string(y) + ", not N ~ empty");
        }
        concluded = true;
        break;
      }
    }
    derived.push_back(out);
    if (out) v.derived.push_back(*out);
  }
  if (!concluded) return fail(trace.steps.size(), "trace does not conclude");
  v.valid = true;
  return v;
}

std::vector<std::string> builtin_trace_names() { return {"ext2", "cont", "subadd"}; }

std::string builtin_trace_text(std::string_view name) {
  if (name == "ext2" || name == "subadd") {
    return "gen E empty\n"
           "below 2E from 1\n"
           "fstep 2\n"
           "gen {0} empty\n"
           "trans 3 4\n"
           "conclude\n";
  }
  if (name == "cont") {
    return "gen E empty\n"
           "below 2E from 1\n"
           "bool neg 2\n"
           "fstep 3\n"
           "gen {0} empty\n"
           "bool neg 5\n"
           "trans 4 6\n"
           "conclude\n";
  }
  throw UsageError("unknown built-in trace '" + std::string(name) + "'");
}

Family builtin_trace_family(std::string_view name) {
  if (name == "ext2") return Family::A;
  if (name == "cont") return Family::B;
  if (name == "subadd") return Family::C;
  throw UsageError("unknown built-in trace '" + std::string(name) + "'");
}

}  // namespace ceplab
