#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ceplab/frame.hpp"

namespace ceplab {

struct Strategy {
  enum class Kind { exhaustive, sampled };

  Kind kind = Kind::exhaustive;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;

  static Strategy exhaustive() { return {}; }
  static Strategy sampled(std::uint64_t count, std::uint64_t seed) {
    return {Kind::sampled, count, seed};
  }
};

enum class VerdictKind { holds, fails, holds_on_sample };

std::string to_string(VerdictKind kind);

struct Binding {
  std::string name;
  Value value;
};

struct Verdict {
  VerdictKind kind = VerdictKind::holds;
  std::vector<Binding> counterexample;  // empty unless kind == fails
  std::uint64_t checked = 0;            // assignments evaluated

  bool failed() const noexcept { return kind == VerdictKind::fails; }
};

std::string describe(Verdict const& v);

}  // namespace ceplab
