#pragma once

#include "ppr/fp.hpp"
#include "ppr/lattice.hpp"

namespace ppr {

/// All integer lifts of W: lift(W) + pZ^n.
Lattice lift_subspace(const FpSubspace& w);

/// { x in Z^cols : q x in W } for an F_p matrix q.
Lattice fp_preimage_lattice(const FpMatrix& q, const FpSubspace& w);

/// Span of the reductions of the integer columns under q.
FpSubspace image_of(const FpMatrix& q, const IntMatrix& vectors);

}  // namespace ppr
