#include "ppr/lattice.hpp"

#include "ppr/error.hpp"

namespace ppr {
namespace {

// Triangular solve against an HNF basis. Returns nothing on failure.
std::optional<IntVector> solve_hermite(const IntMatrix& h, const std::vector<std::size_t>& pivots,
                                       std::size_t rank, IntVector v) {
  IntVector c(rank, Integer(0));
  for (std::size_t j = 0; j < rank; ++j) {
    const std::size_t r = pivots[j];
    for (std::size_t i = (j == 0 ? 0 : pivots[j - 1] + 1); i < r; ++i)
      if (v[i] != 0) return std::nullopt;
    if (v[r] == 0) continue;
    if (v[r] % h(r, j) != 0) return std::nullopt;
    c[j] = v[r] / h(r, j);
    for (std::size_t i = r; i < v.size(); ++i) v[i] -= c[j] * h(i, j);
  }
  if (!is_zero(v)) return std::nullopt;
  return c;
}

}  // namespace

Lattice Lattice::span(std::size_t ambient, const IntMatrix& generators) {
  if (generators.rows() != ambient && !(generators.cols() == 0))
    throw DimensionError("Lattice::span: generator length differs from ambient rank");
  Lattice l;
  l.ambient_ = ambient;
  if (generators.cols() == 0) {
    l.basis_ = IntMatrix(ambient, 0);
    return l;
  }
  HermiteForm f = hnf(generators);
  l.basis_ = f.H.column_range(0, f.rank);
  l.pivots_ = std::move(f.pivot_rows);
  return l;
}

Lattice Lattice::zero(std::size_t ambient) { return span(ambient, IntMatrix(ambient, 0)); }

Lattice Lattice::full(std::size_t ambient) { return span(ambient, IntMatrix::identity(ambient)); }

Lattice Lattice::scaled_full(std::size_t ambient, const Integer& k) {
  return span(ambient, IntMatrix::identity(ambient).scaled(k));
}

Lattice Lattice::direct_sum(const Lattice& a, const Lattice& b) {
  return span(a.ambient_ + b.ambient_, IntMatrix::block_diagonal(a.basis_, b.basis_));
}

bool Lattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("Lattice::contains: ambient mismatch");
  for (std::size_t j = 0; j < other.rank(); ++j)
    if (!contains(other.basis_.column(j))) return false;
  return true;
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_) throw DimensionError("Lattice::coordinates: length mismatch");
  return solve_hermite(basis_, pivots_, rank(), v);
}

IntMatrix Lattice::coordinates_of(const Lattice& sub) const {
  IntMatrix c(rank(), sub.rank());
  for (std::size_t j = 0; j < sub.rank(); ++j) {
    auto x = coordinates(sub.basis_.column(j));
    if (!x) throw DimensionError("Lattice::coordinates_of: not a sublattice");
    c.set_column(j, *x);
  }
  return c;
}

Lattice Lattice::operator+(const Lattice& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("lattice sum: ambient mismatch");
  return span(ambient_, IntMatrix::hstack(basis_, other.basis_));
}

Lattice Lattice::image(const IntMatrix& m) const {
  if (m.cols() != ambient_) throw DimensionError("Lattice::image: matrix width differs from ambient");
  return span(m.rows(), m * basis_);
}

AbelianInvariants Lattice::quotient_invariants(const Lattice& sub) const {
  return invariants_of_relations(rank(), coordinates_of(sub));
}

AbelianInvariants Lattice::cokernel_invariants() const {
  return invariants_of_relations(ambient_, basis_);
}

bool Lattice::is_saturated() const {
  return cokernel_invariants().factors.empty();
}

Lattice kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Lattice::full(n);
  HermiteForm f = hnf(m);
  return Lattice::span(n, f.U.column_range(f.rank, n));
}

Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw DimensionError("lattice_intersection: ambient mismatch");
  const std::size_t n = a.ambient_rank();
  if (a.rank() == 0 || b.rank() == 0) return Lattice::zero(n);
  // a x = b y  <=>  [A | -B] (x, y) = 0
  const IntMatrix stacked = IntMatrix::hstack(a.basis(), b.basis().scaled(-1));
  const Lattice k = kernel_basis(stacked);
  return Lattice::span(n, a.basis() * k.basis().row_range(0, a.rank()));
}

Lattice preimage_lattice(const IntMatrix& m, const Lattice& l) {
  if (l.ambient_rank() != m.rows()) throw DimensionError("preimage_lattice: target rank mismatch");
  const std::size_t n = m.cols();
  if (l.rank() == 0) return kernel_basis(m);
  // M x = L y  <=>  [M | -L] (x, y) = 0, then project onto x
  const IntMatrix stacked = IntMatrix::hstack(m, l.basis().scaled(-1));
  const Lattice k = kernel_basis(stacked);
  return Lattice::span(n, k.basis().row_range(0, n));
}

std::optional<IntVector> solve_in_span(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw DimensionError("solve_in_span: right-hand side length mismatch");
  HermiteForm f = hnf(m);
  auto y = solve_hermite(f.H, f.pivot_rows, f.rank, b);
  if (!y) return std::nullopt;
  IntVector full_y = zero_vector(m.cols());
  for (std::size_t j = 0; j < f.rank; ++j) full_y[j] = (*y)[j];
  return f.U.apply(full_y);
}

std::optional<IntMatrix> solve_in_span(const IntMatrix& m, const IntMatrix& b) {
  if (b.rows() != m.rows()) throw DimensionError("solve_in_span: right-hand side length mismatch");
  HermiteForm f = hnf(m);
  IntMatrix x(m.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto y = solve_hermite(f.H, f.pivot_rows, f.rank, b.column(j));
    if (!y) return std::nullopt;
    IntVector full_y = zero_vector(m.cols());
    for (std::size_t i = 0; i < f.rank; ++i) full_y[i] = (*y)[i];
    x.set_column(j, f.U.apply(full_y));
  }
  return x;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionError("unimodular_inverse: matrix is not square");
  auto x = solve_in_span(u, IntMatrix::identity(u.rows()));
  if (!x) throw HypothesisError("unimodular_inverse: matrix is not unimodular");
  return *x;
}

}  // namespace ppr
