#pragma once

// Eventually periodic subsets of the natural numbers.
//
// A set is stored as a purely periodic pattern (membership of n is
// pattern[n mod m]) overridden by an explicit prefix for n < threshold.
// Values are kept canonical: the modulus is the minimal period of the
// pattern and the prefix is trimmed until its last entry disagrees with the
// pattern. Two sets are equal iff their canonical forms are identical.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ceplab/algebra.hpp"

namespace ceplab {

class EPSet {
 public:
  static constexpr std::uint64_t kModulusCap = 1u << 16;
  static constexpr std::uint64_t kThresholdCap = 1u << 20;

  // The empty set.
  EPSet();

  // Builds and canonicalizes. `pattern.size()` is the modulus (>= 1);
  // `prefix[n]` overrides membership for n < prefix.size().
  static EPSet from_parts(std::vector<bool> pattern, std::vector<bool> prefix);

  bool contains(std::uint64_t n) const noexcept {
    return n < prefix_.size() ? prefix_[n] : pattern_[n % pattern_.size()];
  }

  std::uint64_t modulus() const noexcept { return pattern_.size(); }
  std::uint64_t threshold() const noexcept { return prefix_.size(); }
  std::vector<std::uint64_t> residues() const;
  // Points below the threshold whose membership differs from the periodic rule.
  std::map<std::uint64_t, bool> exceptions() const;

  bool is_finite() const noexcept;
  bool is_cofinite() const noexcept;
  bool empty() const noexcept { return is_finite() && prefix_.empty(); }
  // Largest member of a finite nonempty set.
  std::optional<std::uint64_t> max() const;
  // Members of a finite set, ascending. Throws UsageError on infinite sets.
  std::vector<std::uint64_t> members() const;

  friend bool operator==(EPSet const&, EPSet const&) = default;
  friend bool operator<(EPSet const& a, EPSet const& b);

 private:
  EPSet(std::vector<bool> pattern, std::vector<bool> prefix);
  void canonicalize();

  std::vector<bool> pattern_;
  std::vector<bool> prefix_;
};

// Named constants.
namespace ep {
EPSet empty();
EPSet naturals();
EPSet evens();   // E
EPSet odds();    // O
EPSet two_e();   // multiples of 4
EPSet finite(std::span<std::uint64_t const> members);
EPSet finite(std::initializer_list<std::uint64_t> members);
EPSet singleton(std::uint64_t n);
EPSet initial_segment(std::uint64_t n);  // {0, ..., n-1}
EPSet complement(EPSet const& s);
}  // namespace ep

// `residues` must lie in [0, modulus); `exceptions` maps points to forced
// membership flags.
EPSet make_periodic(std::uint64_t modulus, std::vector<std::uint64_t> const& residues,
                    std::map<std::uint64_t, bool> const& exceptions = {});

// meet/join/arrow/bicond take two operands, neg one.
EPSet ep_boolean_op(BoolOp op, std::span<EPSet const> args);
EPSet ep_meet(EPSet const& a, EPSet const& b);
EPSet ep_join(EPSet const& a, EPSet const& b);
EPSet ep_neg(EPSet const& a);
EPSet ep_bicond(EPSet const& a, EPSet const& b);

bool ep_membership(EPSet const& s, std::uint64_t n);
bool ep_equal(EPSet const& a, EPSet const& b);
bool ep_leq(EPSet const& a, EPSet const& b);

// Structural queries used by the frame constructions.
std::optional<std::uint64_t> initial_segment_length(EPSet const& s);  // s = {0..n-1}, n >= 0
std::optional<std::uint64_t> cosegment_length(EPSet const& s);        // s = -{0..n-1}, n >= 0
std::optional<std::uint64_t> cosingleton_point(EPSet const& s);       // s = -{n}
// Infinite, finitely many odd members, all but finitely many evens.
bool in_e_star(EPSet const& s);
bool has_infinitely_many_odds(EPSet const& s);

struct CaseTag {
  enum class Variant {
    empty,
    finite,              // value = max
    initial_segment,     // value = n, set is {0..n-1}
    two_e,
    co_initial_segment,  // value = n, set is -{0..n}
    co_singleton,        // value = n, set is -{n}, n >= 1
    e_star,
    other,
  };

  Variant variant = Variant::other;
  std::uint64_t value = 0;
  bool infinite_odd_part = false;
  bool is_cofinite = false;

  friend bool operator==(CaseTag const&, CaseTag const&) = default;
};

std::string to_string(CaseTag::Variant v);
std::string to_string(CaseTag const& tag);

// Priority: empty > initial_segment > finite > two_e > co_initial_segment >
// co_singleton > e_star > other.
CaseTag classify(EPSet const& s);

// Literal syntax:
//   empty | N | E | O | 2E | {1,2,3} | co{3}
//   periodic m=<nat> r=<nat,...> [except=<+i,-j,...>]
EPSet parse_epset(std::string_view text);
std::string to_string(EPSet const& s);

// Seeded generator of test sets. Each draw picks one of the shapes below
// uniformly, then fills in its parameters:
//   empty, N, E, O, 2E, -2E, singleton, finite subset of [0,12),
//   initial segment, complement of a finite set, co-initial segment,
//   co-singleton, E-block (E with finitely many evens removed and odds
//   added), O-block (same for O), random periodic set (modulus 1..6,
//   random residues, exceptions below 12).
// Only the raw 64-bit output of mt19937_64 is used, so streams are identical
// across standard libraries.
class EPSetSampler {
 public:
  static constexpr unsigned kShapeCount = 15;

  explicit EPSetSampler(std::uint64_t seed) : rng_(seed) {}

  EPSet next();
  EPSet next_of_shape(unsigned shape);
  static std::string shape_name(unsigned shape);

 private:
  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }
  bool coin() { return (rng_() >> 17) & 1u; }

  std::mt19937_64 rng_;
};

}  // namespace ceplab
