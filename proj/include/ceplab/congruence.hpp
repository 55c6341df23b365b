#pragma once

// Congruences of finite Boolean frames are represented by their congruential
// element a: the congruence is x ~ y iff (x <-> y) >= a. Smaller elements are
// larger congruences; 1 is the diagonal and 0 the total congruence.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ceplab/frame.hpp"

namespace ceplab {

// f(x) & a = f(x & a) & a for every x.
bool is_congruential(FiniteFrame const& frame, Element a);

// Maximum congruential element below c.
Element largest_congruential_below(FiniteFrame const& frame, Element c);

inline constexpr std::uint32_t kLatticeCarrierCap = 1u << 12;

struct CongruenceLattice {
  std::vector<Element> elements;  // ascending encoding

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t nontrivial() const noexcept;
  // (smaller congruence, covering congruence), i.e. pairs a > b of elements
  // with no congruential element strictly between.
  std::vector<std::pair<Element, Element>> covers() const;
};

// Throws ResourceError above kLatticeCarrierCap elements.
CongruenceLattice congruence_lattice(FiniteFrame const& frame);

// lcb(c) = 0 for every coatom c.
bool is_simple(FiniteFrame const& frame);

// A subset of the carrier closed under meet, complement and f.
struct Subalgebra {
  std::vector<Element> elements;  // ascending encoding

  bool contains(Element x) const;
  friend bool operator==(Subalgebra const&, Subalgebra const&) = default;
};

Subalgebra generate_subalgebra(FiniteFrame const& frame, std::span<Element const> generators);

struct SymbolicSubalgebra {
  std::vector<EPSet> elements;  // ascending in EPSet order
  bool fixpoint = false;        // false when the bound stopped the closure

  bool contains(EPSet const& s) const;
};

// Closure under meet, complement and f, stopped once `bound` elements are
// present.
SymbolicSubalgebra generate_subalgebra(SymbolicFrame const& frame, std::span<EPSet const> generators,
                                       std::size_t bound);

// Congruences of a subalgebra, as elements of it.
bool is_congruential_in(FiniteFrame const& frame, Subalgebra const& sub, Element a);
std::vector<Element> subalgebra_congruences(FiniteFrame const& frame, Subalgebra const& sub);

inline constexpr std::uint32_t kCepCarrierCap = 1u << 4;

// Every subalgebra, in order of discovery from the minimal one. Throws
// ResourceError above kCepCarrierCap elements.
std::vector<Subalgebra> all_subalgebras(FiniteFrame const& frame);

struct CepFailure {
  Subalgebra subalgebra;
  Element generator;  // congruence of the subalgebra that does not extend
  Element witness;    // b in the subalgebra with b >= lcb(generator), b not >= generator
};

struct CepResult {
  std::optional<CepFailure> failure;
  std::size_t subalgebras = 0;
  std::size_t congruences = 0;

  bool holds() const noexcept { return !failure.has_value(); }
};

// Throws ResourceError above kCepCarrierCap elements.
CepResult cep_check_full(FiniteFrame const& frame);

struct Refutation {
  Element extension;               // lcb of the generator in the whole frame
  std::optional<Element> witness;  // largest-encoding b, if any

  bool refuted() const noexcept { return witness.has_value(); }
};

// Throws UsageError unless a lies in the subalgebra and is congruential there.
Refutation cep_refute(FiniteFrame const& frame, Subalgebra const& sub, Element a);

// ---------------------------------------------------------------- traces

struct TraceStep {
  enum class Kind { gen, below, fstep, boolean, trans, conclude };

  Kind kind = Kind::conclude;
  std::optional<EPSet> left, right;   // gen: both; below: left
  BoolOp op = BoolOp::neg;            // boolean
  std::vector<std::size_t> premises;  // 1-based step numbers
};

struct ForcingTrace {
  std::vector<TraceStep> steps;
};

// One step per line: `gen <set> <set>`, `below <set> from <k>`, `fstep <k>`,
// `bool <op> <k>...`, `trans <k> <l>`, `conclude`. Steps are numbered from 1;
// blank lines and lines starting with '#' are skipped. Set literals with
// spaces are wrapped in [ ].
ForcingTrace parse_trace(std::string_view text);
std::string to_string(ForcingTrace const& trace);

using SetPredicate = std::function<bool(EPSet const&)>;

// Modulus dividing 2: finite modifications of empty, E, O and N.
bool four_block(EPSet const& s);

struct TraceVerdict {
  bool valid = false;
  std::size_t step = 0;  // first offending step, 0 for side conditions
  std::string reason;
  std::vector<std::pair<EPSet, EPSet>> derived;
};

TraceVerdict replay_trace(SymbolicFrame const& frame, SetPredicate const& in_subalgebra,
                          SetPredicate const& in_filter, ForcingTrace const& trace);

// Built-in traces: "ext2" (A_X), "cont" (B_X), "subadd" (C_X).
std::vector<std::string> builtin_trace_names();
std::string builtin_trace_text(std::string_view name);
Family builtin_trace_family(std::string_view name);

}  // namespace ceplab
