#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ppr/int_matrix.hpp"

namespace ppr {

/// A validated prime modulus (trial division; must fit in 31 bits so that
/// products of residues fit in 64 bits).
class Prime {
 public:
  explicit Prime(std::uint64_t value);
  std::uint64_t value() const { return value_; }
  Integer as_integer() const { return Integer(static_cast<unsigned long>(value_)); }
  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint64_t value_;
};

bool is_prime(std::uint64_t n);

using FpVector = std::vector<std::uint64_t>;

/// Dense matrix over the field with p elements; entries kept in [0, p).
class FpMatrix {
 public:
  FpMatrix(Prime p, std::size_t rows, std::size_t cols);

  static FpMatrix identity(Prime p, std::size_t n);
  static FpMatrix reduce(Prime p, const IntMatrix& m);
  static FpMatrix from_columns(Prime p, std::size_t rows, const std::vector<FpVector>& cols);
  static FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
  static FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);

  Prime prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint64_t v) { data_[i * cols_ + j] = v % p_.value(); }

  FpVector column(std::size_t j) const;
  FpVector row(std::size_t i) const;
  FpMatrix select_columns(const std::vector<std::size_t>& idx) const;
  FpMatrix transpose() const;
  FpMatrix negated() const;
  FpVector apply(const FpVector& v) const;
  bool is_zero() const;
  /// Least non-negative residues as integers.
  IntMatrix lift() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);

 private:
  Prime p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

std::ostream& operator<<(std::ostream& os, const FpMatrix& m);

std::uint64_t reduce_mod(const Integer& x, Prime p);
FpVector reduce_vector(const IntVector& v, Prime p);
IntVector lift_vector(const FpVector& v);
std::uint64_t inverse_mod(std::uint64_t a, Prime p);

struct RowEchelon {
  FpMatrix reduced;  // reduced row echelon form, zero rows at the bottom
  std::vector<std::size_t> pivots;
};

RowEchelon rref(const FpMatrix& m);

/// Subspace of F_p^n. The basis is stored as the nonzero rows of a reduced
/// row echelon matrix, which is unique per subspace.
class FpSubspace {
 public:
  FpSubspace(Prime p, std::size_t ambient);

  static FpSubspace span_of_columns(const FpMatrix& m);
  static FpSubspace span_of_rows(const FpMatrix& m);
  static FpSubspace full(Prime p, std::size_t ambient);

  Prime prime() const { return basis_.prime(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  /// Basis vectors as rows (reduced row echelon).
  const FpMatrix& basis_rows() const { return basis_; }
  /// Basis vectors as columns.
  FpMatrix basis_columns() const { return basis_.transpose(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const FpVector& v) const;
  bool contains(const FpSubspace& other) const;
  /// v minus its component along the basis; zero exactly when v is contained.
  FpVector reduce(FpVector v) const;

  FpSubspace operator+(const FpSubspace& other) const;
  friend bool operator==(const FpSubspace&, const FpSubspace&) = default;

 private:
  std::size_t ambient_;
  FpMatrix basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t fp_rank(const FpMatrix& m);
/// { x : M x = 0 }
FpSubspace fp_kernel(const FpMatrix& m);
/// Column span of M.
FpSubspace fp_image(const FpMatrix& m);
std::optional<FpVector> fp_solve(const FpMatrix& m, const FpVector& b);
/// Standard basis vectors at the non-pivot positions of W's echelon form.
FpSubspace fp_complement(const FpSubspace& w);
/// Complement of `inner` inside `outer` (inner must be contained in outer):
/// vectors added greedily from outer's echelon basis.
FpSubspace fp_relative_complement(const FpSubspace& inner, const FpSubspace& outer);
FpSubspace fp_intersection(const FpSubspace& a, const FpSubspace& b);
/// { x : M x in W }
FpSubspace fp_preimage(const FpMatrix& m, const FpSubspace& w);

/// Coordinates on F_p^n / W: P has kernel exactly W and `section` satisfies
/// P * section = identity (it embeds the non-pivot standard basis vectors).
struct FpQuotient {
  FpMatrix projection;
  FpMatrix section;
};

FpQuotient fp_quotient(const FpSubspace& w);

/// Some right inverse X (cols x rows) with M X = I; M must be surjective.
FpMatrix fp_right_inverse(const FpMatrix& m);

}  // namespace ppr
