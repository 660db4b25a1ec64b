#pragma once

#include <cstddef>
#include <optional>

#include "ppr/int_matrix.hpp"
#include "ppr/normal_form.hpp"

namespace ppr {

/// Subgroup of Z^n, stored by its canonical column HNF basis. Two lattices are
/// equal exactly when their bases are equal.
class Lattice {
 public:
  Lattice() = default;

  /// Lattice spanned by the columns of `generators` (rows == ambient).
  static Lattice span(std::size_t ambient, const IntMatrix& generators);
  static Lattice zero(std::size_t ambient);
  static Lattice full(std::size_t ambient);
  /// k * Z^n
  static Lattice scaled_full(std::size_t ambient, const Integer& k);
  /// A (+) B inside Z^{a+b}.
  static Lattice direct_sum(const Lattice& a, const Lattice& b);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const IntVector& v) const;
  bool contains(const Lattice& other) const;
  /// Coefficients c with basis() * c == v, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  /// Coordinates of every basis vector of `sub` (which must be contained).
  IntMatrix coordinates_of(const Lattice& sub) const;

  Lattice operator+(const Lattice& other) const;
  /// { M x : x in this }
  Lattice image(const IntMatrix& m) const;
  /// Quotient group this / sub; requires sub contained in this.
  AbelianInvariants quotient_invariants(const Lattice& sub) const;
  /// Ambient group Z^n / this.
  AbelianInvariants cokernel_invariants() const;
  bool is_saturated() const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  std::size_t ambient_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// { x : M x = 0 }, always saturated.
Lattice kernel_basis(const IntMatrix& m);
Lattice lattice_intersection(const Lattice& a, const Lattice& b);
/// { x : M x in L }
Lattice preimage_lattice(const IntMatrix& m, const Lattice& l);
/// Some x with M x = b, or nothing when b is outside the column span.
std::optional<IntVector> solve_in_span(const IntMatrix& m, const IntVector& b);
/// Column-wise solve of M X = B with a single Hermite reduction of M.
std::optional<IntMatrix> solve_in_span(const IntMatrix& m, const IntMatrix& b);
/// Inverse of a square matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& u);

}  // namespace ppr
