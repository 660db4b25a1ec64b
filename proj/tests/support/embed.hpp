#pragma once

#include "ppr/pullback.hpp"
#include "ppr/random.hpp"

namespace ppr::testing {

/// The same R-module seen through a block-diagonal unimodular change of the
/// ambient Z^a (+) Z^b (block-diagonal so that the R-action is preserved).
inline LatticeRModule reembed(Rng& rng, const LatticeRModule& s) {
  const IntMatrix u = IntMatrix::block_diagonal(random_unimodular(rng, s.a), random_unimodular(rng, s.b));
  return LatticeRModule{s.p, s.a, s.b, s.lattice.image(u), s.relations.image(u)};
}

}  // namespace ppr::testing
