#include "ceplab/periodic.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ceplab/errors.hpp"

namespace ceplab {

EPSet::EPSet() : pattern_{false} {}

EPSet::EPSet(std::vector<bool> pattern, std::vector<bool> prefix)
    : pattern_(std::move(pattern)), prefix_(std::move(prefix)) {
  canonicalize();
}

EPSet EPSet::from_parts(std::vector<bool> pattern, std::vector<bool> prefix) {
  if (pattern.empty()) throw UsageError("modulus must be at least 1");
  if (pattern.size() > kModulusCap) throw ResourceError("modulus cap exceeded");
  if (prefix.size() > kThresholdCap) throw ResourceError("threshold cap exceeded");
  return EPSet(std::move(pattern), std::move(prefix));
}

void EPSet::canonicalize() {
  std::size_t const m = pattern_.size();
  for (std::size_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < m && periodic; ++i) periodic = pattern_[i] == pattern_[i % d];
    if (periodic) {
      pattern_.resize(d);
      break;
    }
  }
  while (!prefix_.empty() && prefix_.back() == pattern_[(prefix_.size() - 1) % pattern_.size()]) {
    prefix_.pop_back();
  }
}

std::vector<std::uint64_t> EPSet::residues() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < pattern_.size(); ++i)
    if (pattern_[i]) out.push_back(i);
  return out;
}

std::map<std::uint64_t, bool> EPSet::exceptions() const {
  std::map<std::uint64_t, bool> out;
  for (std::size_t n = 0; n < prefix_.size(); ++n) {
    if (prefix_[n] != pattern_[n % pattern_.size()]) out.emplace(n, prefix_[n]);
  }
  return out;
}

bool EPSet::is_finite() const noexcept {
  return std::none_of(pattern_.begin(), pattern_.end(), [](bool b) { return b; });
}

bool EPSet::is_cofinite() const noexcept {
  return std::all_of(pattern_.begin(), pattern_.end(), [](bool b) { return b; });
}

std::optional<std::uint64_t> EPSet::max() const {
  if (!is_finite() || prefix_.empty()) return std::nullopt;
  return prefix_.size() - 1;
}

std::vector<std::uint64_t> EPSet::members() const {
  if (!is_finite()) throw UsageError("members() of an infinite set");
  std::vector<std::uint64_t> out;
  for (std::size_t n = 0; n < prefix_.size(); ++n)
    if (prefix_[n]) out.push_back(n);
  return out;
}

bool operator<(EPSet const& a, EPSet const& b) {
  if (a.pattern_.size() != b.pattern_.size()) return a.pattern_.size() < b.pattern_.size();
  if (a.pattern_ != b.pattern_) return a.pattern_ < b.pattern_;
  if (a.prefix_.size() != b.prefix_.size()) return a.prefix_.size() < b.prefix_.size();
  return a.prefix_ < b.prefix_;
}

namespace ep {

EPSet empty() { return EPSet{}; }
EPSet naturals() { return EPSet::from_parts({true}, {}); }
EPSet evens() { return EPSet::from_parts({true, false}, {}); }
EPSet odds() { return EPSet::from_parts({false, true}, {}); }
EPSet two_e() { return EPSet::from_parts({true, false, false, false}, {}); }

EPSet finite(std::span<std::uint64_t const> members) {
  std::vector<bool> prefix;
  for (std::uint64_t n : members) {
    if (n >= EPSet::kThresholdCap) throw ResourceError("threshold cap exceeded");
    if (n >= prefix.size()) prefix.resize(n + 1, false);
    prefix[n] = true;
  }
  return EPSet::from_parts({false}, std::move(prefix));
}

EPSet finite(std::initializer_list<std::uint64_t> members) {
  return finite(std::span<std::uint64_t const>(members.begin(), members.size()));
}

EPSet singleton(std::uint64_t n) { return finite({n}); }

EPSet initial_segment(std::uint64_t n) {
  if (n > EPSet::kThresholdCap) throw ResourceError("threshold cap exceeded");
  return EPSet::from_parts({false}, std::vector<bool>(n, true));
}

EPSet complement(EPSet const& s) { return ep_neg(s); }

}  // namespace ep

EPSet make_periodic(std::uint64_t modulus, std::vector<std::uint64_t> const& residues,
                    std::map<std::uint64_t, bool> const& exceptions) {
  if (modulus == 0) throw UsageError("modulus must be at least 1");
  if (modulus > EPSet::kModulusCap) throw ResourceError("modulus cap exceeded");
  std::vector<bool> pattern(modulus, false);
  for (std::uint64_t r : residues) {
    if (r >= modulus) {
      throw UsageError("residue " + std::to_string(r) + " out of range for modulus " +
                       std::to_string(modulus));
    }
    pattern[r] = true;
  }
  std::vector<bool> prefix;
  if (!exceptions.empty()) {
    std::uint64_t const top = exceptions.rbegin()->first;
    if (top >= EPSet::kThresholdCap) throw ResourceError("threshold cap exceeded");
    prefix.resize(top + 1);
    for (std::uint64_t n = 0; n <= top; ++n) prefix[n] = pattern[n % modulus];
    for (auto const& [n, member] : exceptions) prefix[n] = member;
  }
  return EPSet::from_parts(std::move(pattern), std::move(prefix));
}

namespace {

bool apply_bit(BoolOp op, bool x, bool y) {
  switch (op) {
    case BoolOp::meet: return x && y;
    case BoolOp::join: return x || y;
    case BoolOp::neg: return !x;
    case BoolOp::arrow: return !x || y;
    case BoolOp::bicond: return x == y;
  }
  return false;
}

}  // namespace

EPSet ep_boolean_op(BoolOp op, std::span<EPSet const> args) {
  std::size_t const arity = op == BoolOp::neg ? 1 : 2;
  if (args.size() != arity) {
    throw UsageError(to_string(op) + " expects " + std::to_string(arity) + " argument(s)");
  }
  EPSet const& a = args[0];
  EPSet const& b = args[arity - 1];
  std::uint64_t const m = std::lcm(a.modulus(), b.modulus());
  if (m > EPSet::kModulusCap) throw ResourceError("modulus cap exceeded");
  std::uint64_t const threshold = std::max(a.threshold(), b.threshold());

  std::vector<bool> pattern(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    // i and any n >= threshold with n = i (mod m) share residues mod both moduli.
    std::uint64_t const n = threshold + ((i + m - threshold % m) % m);
    pattern[i] = apply_bit(op, a.contains(n), b.contains(n));
  }
  std::vector<bool> prefix(threshold);
  for (std::uint64_t n = 0; n < threshold; ++n) prefix[n] = apply_bit(op, a.contains(n), b.contains(n));
  return EPSet::from_parts(std::move(pattern), std::move(prefix));
}

EPSet ep_meet(EPSet const& a, EPSet const& b) {
  EPSet const args[] = {a, b};
  return ep_boolean_op(BoolOp::meet, args);
}
EPSet ep_join(EPSet const& a, EPSet const& b) {
  EPSet const args[] = {a, b};
  return ep_boolean_op(BoolOp::join, args);
}
EPSet ep_neg(EPSet const& a) {
  EPSet const args[] = {a};
  return ep_boolean_op(BoolOp::neg, args);
}
EPSet ep_bicond(EPSet const& a, EPSet const& b) {
  EPSet const args[] = {a, b};
  return ep_boolean_op(BoolOp::bicond, args);
}

bool ep_membership(EPSet const& s, std::uint64_t n) { return s.contains(n); }
bool ep_equal(EPSet const& a, EPSet const& b) { return a == b; }
bool ep_leq(EPSet const& a, EPSet const& b) { return ep_meet(a, b) == a; }

std::optional<std::uint64_t> initial_segment_length(EPSet const& s) {
  if (!s.is_finite()) return std::nullopt;
  auto const members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] != i) return std::nullopt;
  return members.size();
}

std::optional<std::uint64_t> cosegment_length(EPSet const& s) {
  if (!s.is_cofinite()) return std::nullopt;
  return initial_segment_length(ep_neg(s));
}

std::optional<std::uint64_t> cosingleton_point(EPSet const& s) {
  if (!s.is_cofinite()) return std::nullopt;
  auto const missing = ep_neg(s).members();
  if (missing.size() != 1) return std::nullopt;
  return missing.front();
}

bool in_e_star(EPSet const& s) {
  // Finitely many odds and cofinitely many evens force the tail to be E.
  return s.modulus() == 2 && s.contains(2 * s.threshold()) && !s.contains(2 * s.threshold() + 1);
}

bool has_infinitely_many_odds(EPSet const& s) {
  std::uint64_t const m = s.modulus();
  std::uint64_t const base = s.threshold() + m;  // beyond every exception
  for (std::uint64_t i = 0; i < 2 * m; ++i) {
    std::uint64_t const n = base + i;
    if (n % 2 == 1 && s.contains(n)) return true;
  }
  return false;
}

std::string to_string(CaseTag::Variant v) {
  switch (v) {
    case CaseTag::Variant::empty: return "empty";
    case CaseTag::Variant::finite: return "finite";
    case CaseTag::Variant::initial_segment: return "initial_segment";
    case CaseTag::Variant::two_e: return "two_e";
    case CaseTag::Variant::co_initial_segment: return "co_initial_segment";
    case CaseTag::Variant::co_singleton: return "co_singleton";
    case CaseTag::Variant::e_star: return "e_star";
    case CaseTag::Variant::other: return "other";
  }
  return "?";
}

std::string to_string(CaseTag const& tag) {
  std::string out = to_string(tag.variant);
  switch (tag.variant) {
    case CaseTag::Variant::finite:
    case CaseTag::Variant::initial_segment:
    case CaseTag::Variant::co_initial_segment:
    case CaseTag::Variant::co_singleton:
      out += "(" + std::to_string(tag.value) + ")";
      break;
    default:
      break;
  }
  if (tag.infinite_odd_part) out += " +odd";
  if (tag.is_cofinite) out += " +cofinite";
  return out;
}

CaseTag classify(EPSet const& s) {
  using V = CaseTag::Variant;
  CaseTag tag;
  tag.infinite_odd_part = has_infinitely_many_odds(s);
  tag.is_cofinite = s.is_cofinite();

  if (s.empty()) {
    tag.variant = V::empty;
  } else if (auto n = initial_segment_length(s)) {
    tag.variant = V::initial_segment;
    tag.value = *n;
  } else if (s.is_finite()) {
    tag.variant = V::finite;
    tag.value = *s.max();
  } else if (s == ep::two_e()) {
    tag.variant = V::two_e;
  } else if (auto k = cosegment_length(s); k && *k >= 1) {
    tag.variant = V::co_initial_segment;
    tag.value = *k - 1;
  } else if (auto p = cosingleton_point(s)) {
    tag.variant = V::co_singleton;
    tag.value = *p;
  } else if (in_e_star(s)) {
    tag.variant = V::e_star;
  }
  return tag;
}

// ---------------------------------------------------------------- literals

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  EPSet parse() {
    skip_ws();
    EPSet out = parse_set();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(std::string const& what) const {
    throw SyntaxError("bad set literal '" + std::string(text_) + "': " + what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  bool at_word_end() const {
    return pos_ >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_]));
  }

  std::uint64_t number() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a natural number");
    }
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > EPSet::kThresholdCap) fail("number too large");
      ++pos_;
    }
    return value;
  }

  std::vector<std::uint64_t> braced_list() {
    if (!eat("{")) fail("expected '{'");
    std::vector<std::uint64_t> out;
    skip_ws();
    if (eat("}")) return out;
    for (;;) {
      skip_ws();
      out.push_back(number());
      skip_ws();
      if (eat("}")) return out;
      if (!eat(",")) fail("expected ',' or '}'");
    }
  }

  EPSet parse_set() {
    std::size_t const start = pos_;
    if (eat("empty") && at_word_end()) return ep::empty();
    pos_ = start;
    if (eat("co")) {
      skip_ws();
      return ep::complement(ep::finite(braced_list()));
    }
    if (eat("periodic")) return parse_periodic();
    if (eat("2E") && at_word_end()) return ep::two_e();
    pos_ = start;
    if (eat("N") && at_word_end()) return ep::naturals();
    pos_ = start;
    if (eat("E") && at_word_end()) return ep::evens();
    pos_ = start;
    if (eat("O") && at_word_end()) return ep::odds();
    pos_ = start;
    if (pos_ < text_.size() && text_[pos_] == '{') return ep::finite(braced_list());
    fail("unknown set literal");
  }

  EPSet parse_periodic() {
    skip_ws();
    if (!eat("m=")) fail("expected 'm='");
    std::uint64_t const m = number();
    skip_ws();
    if (!eat("r=")) fail("expected 'r='");
    std::vector<std::uint64_t> residues;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      residues.push_back(number());
      while (eat(",")) residues.push_back(number());
    }
    std::map<std::uint64_t, bool> exceptions;
    skip_ws();
    if (eat("except=")) {
      do {
        bool member;
        if (eat("+")) {
          member = true;
        } else if (eat("-")) {
          member = false;
        } else {
          fail("expected '+' or '-'");
        }
        exceptions[number()] = member;
      } while (eat(","));
    }
    std::size_t const at = pos_;
    try {
      return make_periodic(m, residues, exceptions);
    } catch (UsageError const& e) {
      pos_ = at;
      fail(e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join_list(std::vector<std::uint64_t> const& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

EPSet parse_epset(std::string_view text) { return LiteralParser(text).parse(); }

std::string to_string(EPSet const& s) {
  if (s.empty()) return "empty";
  if (s == ep::naturals()) return "N";
  if (s == ep::evens()) return "E";
  if (s == ep::odds()) return "O";
  if (s == ep::two_e()) return "2E";
  if (s.is_finite()) return "{" + join_list(s.members()) + "}";
  if (s.is_cofinite()) return "co{" + join_list(ep_neg(s).members()) + "}";
  std::string out = "periodic m=" + std::to_string(s.modulus()) + " r=" + join_list(s.residues());
  auto const ex = s.exceptions();
  if (!ex.empty()) {
    out += " except=";
    bool first = true;
    for (auto const& [n, member] : ex) {
      if (!first) out += ',';
      first = false;
      out += (member ? '+' : '-') + std::to_string(n);
    }
  }
  return out;
}

// ----------------------------------------------------------------- sampler

std::string EPSetSampler::shape_name(unsigned shape) {
  static char const* const names[kShapeCount] = {
      "empty",       "N",           "E",        "O",          "2E",
      "co-2E",       "singleton",   "finite",   "segment",    "cofinite",
      "co-segment",  "co-singleton", "E-block", "O-block",    "periodic"};
  return shape < kShapeCount ? names[shape] : "?";
}

EPSet EPSetSampler::next() { return next_of_shape(static_cast<unsigned>(below(kShapeCount))); }

EPSet EPSetSampler::next_of_shape(unsigned shape) {
  auto random_finite = [this](std::uint64_t bound) {
    std::vector<std::uint64_t> members;
    for (std::uint64_t n = 0; n < bound; ++n)
      if (coin()) members.push_back(n);
    return ep::finite(members);
  };
  auto block = [this](EPSet base) {
    std::map<std::uint64_t, bool> flips;
    std::uint64_t const count = below(4);
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t const n = below(16);
      flips[n] = !base.contains(n);
    }
    EPSet out = base;
    for (auto const& [n, member] : flips) {
      EPSet const point = ep::singleton(n);
      out = member ? ep_join(out, point) : ep_meet(out, ep_neg(point));
    }
    return out;
  };

  switch (shape) {
    case 0: return ep::empty();
    case 1: return ep::naturals();
    case 2: return ep::evens();
    case 3: return ep::odds();
    case 4: return ep::two_e();
    case 5: return ep_neg(ep::two_e());
    case 6: return ep::singleton(below(12));
    case 7: return random_finite(12);
    case 8: return ep::initial_segment(1 + below(12));
    case 9: return ep_neg(random_finite(12));
    case 10: return ep_neg(ep::initial_segment(1 + below(12)));
    case 11: return ep_neg(ep::singleton(below(12)));
    case 12: return block(ep::evens());
    case 13: return block(ep::odds());
    default: {
      std::uint64_t const m = 1 + below(6);
      std::vector<std::uint64_t> residues;
      for (std::uint64_t r = 0; r < m; ++r)
        if (coin()) residues.push_back(r);
      std::map<std::uint64_t, bool> exceptions;
      std::uint64_t const count = below(4);
      for (std::uint64_t i = 0; i < count; ++i) exceptions[below(12)] = coin();
      return make_periodic(m, residues, exceptions);
    }
  }
}

}  // namespace ceplab
