#pragma once

// The verification suite: one routine per result of the source paper, each
// with a hard-coded expected outcome.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ceplab/frame.hpp"
#include "ceplab/term.hpp"

namespace ceplab {

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::uint64_t samples = 10000;
};

struct Fact {
  std::string key;
  std::string value;
};

struct ItemOutcome {
  std::string id;
  std::string expected;
  bool ok = false;
  std::string summary;
  std::vector<Fact> facts;
};

std::vector<std::string> const& verification_ids();

// Throws UsageError on an unknown id.
ItemOutcome run_verification(std::string_view id, VerifyOptions const& options);

// Identities with at most two variables, mixing ones that hold and fail on
// the frames below.
std::vector<Identity> identity_pool();

// Small normal, unit-preserving frames, wheel(5) first.
std::vector<std::pair<std::string, FiniteFrame>> normal_frame_pool();

// Complex algebras of every Kripke frame on 1..max_worlds worlds.
std::vector<FiniteFrame> all_complex_algebras(unsigned max_worlds);

// Every operation on a carrier of at most 2 atoms satisfying
// f(x | y) = f(x) | f(y), found by filtering all operations.
std::vector<FiniteFrame> all_additive_frames(unsigned atoms);

// One normal, unit-preserving frame for each combination of extensive,
// monotone and idempotent, at index 4*ext + 2*mono + idem. Searches 2-atom
// operations first, then 3-atom ones, in ascending table order.
std::vector<FiniteFrame> profile_representatives();

// x -> f(x) & -f(0).
FiniteFrame normalize_operation(FiniteFrame const& base);

// Renders indices as "{a,b,...}".
std::string index_set(std::vector<unsigned> const& members);

}  // namespace ceplab
