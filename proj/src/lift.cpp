#include "ppr/lift.hpp"

namespace ppr {

Lattice lift_subspace(const FpSubspace& w) {
  const std::size_t n = w.ambient_dim();
  return Lattice::span(n, w.basis_columns().lift()) + Lattice::scaled_full(n, w.prime().as_integer());
}

Lattice fp_preimage_lattice(const FpMatrix& q, const FpSubspace& w) {
  return preimage_lattice(q.lift(), lift_subspace(w));
}

FpSubspace image_of(const FpMatrix& q, const IntMatrix& vectors) {
  return fp_image(q * FpMatrix::reduce(q.prime(), vectors));
}

}  // namespace ppr
