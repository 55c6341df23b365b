#pragma once

// Uniform operation bundles over finite and symbolic frames, used by the
// generic evaluators.

#include "ceplab/frame.hpp"

namespace ceplab::detail {

struct FiniteOps {
  using value_type = Element;
  FiniteFrame const& frame;

  FiniteAlgebra const& alg() const { return frame.algebra(); }
  Element zero() const { return alg().bottom(); }
  Element one() const { return alg().top(); }
  Element meet(Element x, Element y) const { return alg().meet(x, y); }
  Element join(Element x, Element y) const { return alg().join(x, y); }
  Element neg(Element x) const { return alg().neg(x); }
  Element f(Element x) const { return frame.apply(x); }
  bool leq(Element x, Element y) const { return alg().leq(x, y); }
};

struct SymbolicOps {
  using value_type = EPSet;
  SymbolicFrame const& frame;

  EPSet zero() const { return ep::empty(); }
  EPSet one() const { return ep::naturals(); }
  EPSet meet(EPSet const& x, EPSet const& y) const { return ep_meet(x, y); }
  EPSet join(EPSet const& x, EPSet const& y) const { return ep_join(x, y); }
  EPSet neg(EPSet const& x) const { return ep_neg(x); }
  EPSet f(EPSet const& x) const { return frame.apply(x); }
  bool leq(EPSet const& x, EPSet const& y) const { return ep_leq(x, y); }
};

}  // namespace ceplab::detail
