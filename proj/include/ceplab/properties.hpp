#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ceplab/frame.hpp"
#include "ceplab/verdict.hpp"

namespace ceplab {

enum class PropertyTag {
  normal,             // f(0) = 0
  unit_preserving,    // f(1) = 1
  additive,           // f(x | y) = f(x) | f(y)
  subadditive,        // f(x | y) <= f(x) | f(y)
  monotone,           // f(x) | f(y) <= f(x | y)
  extensive,          // x <= f(x)
  contractive,        // f(x) <= x
  idempotent,         // f(f(x)) = f(x)
  semi_complemented,  // f(-x) = -f(x)
  symmetric,          // x <= -f(-f(x))
};

inline constexpr PropertyTag kAllProperties[] = {
    PropertyTag::normal,      PropertyTag::unit_preserving, PropertyTag::additive,
    PropertyTag::subadditive, PropertyTag::monotone,        PropertyTag::extensive,
    PropertyTag::contractive, PropertyTag::idempotent,      PropertyTag::semi_complemented,
    PropertyTag::symmetric};

std::string to_string(PropertyTag p);
std::optional<PropertyTag> parse_property(std::string_view name);

// Number of universally quantified variables in the defining (in)equation.
unsigned arity(PropertyTag p);

// Exhaustive on finite frames; sampled on symbolic frames (UsageError when
// exhaustive is requested there). Properties without variables are always
// decided definitively. Counterexamples are the first failure in ascending
// encoding order (x outer, y inner).
Verdict check_property(Frame const& frame, PropertyTag p, Strategy strategy);
Verdict check_property(FiniteFrame const& frame, PropertyTag p);

struct LabelledPair {
  std::string label;
  EPSet x, y;
};

// Representative pairs for every branch of the case analysis behind
// subadditivity of C_X (finite/finite, infinite/finite and infinite/infinite,
// with the co-atom, E* and remaining subcases), in both argument orders.
std::vector<LabelledPair> subadditive_case_grid(SymbolicFrame const& frame);

}  // namespace ceplab
