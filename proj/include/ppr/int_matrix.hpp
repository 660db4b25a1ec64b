#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ppr {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix diagonal(std::size_t rows, std::size_t cols, const IntVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  void set_column(std::size_t j, const IntVector& v);
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
  IntMatrix column_range(std::size_t begin, std::size_t end) const;
  IntMatrix row_range(std::size_t begin, std::size_t end) const;

  IntMatrix transpose() const;
  IntMatrix scaled(const Integer& k) const;
  IntVector apply(const IntVector& v) const;
  bool is_zero() const;

  // Elementary operations used by the normal-form routines.
  void swap_columns(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);
  void negate_column(std::size_t j);
  void negate_row(std::size_t i);
  /// col[dst] += k * col[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// (col a, col b) <- (s*a + t*b, u*a + v*b)
  void combine_columns(std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                       const Integer& u, const Integer& v);
  /// (row a, row b) <- (s*a + t*b, u*a + v*b)
  void combine_rows(std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                    const Integer& u, const Integer& v);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::string to_string(const IntMatrix& m);

IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const IntVector& v);

/// Floor division and the matching non-negative remainder.
Integer floor_div(const Integer& a, const Integer& b);

/// Determinant by fraction-free elimination (Bareiss).
Integer determinant(const IntMatrix& m);

}  // namespace ppr
