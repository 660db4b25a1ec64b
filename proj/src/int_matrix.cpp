#include "ppr/int_matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "ppr/error.hpp"

namespace ppr {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) throw DimensionError("hstack: row counts differ");
  IntMatrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
  }
  return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.cols_) throw DimensionError("vstack: column counts differ");
  IntMatrix m(a.rows_ + b.rows_, a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) {
    for (std::size_t i = 0; i < a.rows_; ++i) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i) m(a.rows_ + i, j) = b(i, j);
  }
  return m;
}

IntMatrix IntMatrix::block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
  return m;
}

IntMatrix IntMatrix::diagonal(std::size_t rows, std::size_t cols, const IntVector& d) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size() && i < rows && i < cols; ++i) m(i, i) = d[i];
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_column(std::size_t j, const IntVector& v) {
  if (v.size() != rows_) throw DimensionError("set_column: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  IntMatrix m(rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, idx[k]);
  return m;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  IntMatrix m(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(idx[k], j);
  return m;
}

IntMatrix IntMatrix::column_range(std::size_t begin, std::size_t end) const {
  std::vector<std::size_t> idx;
  for (std::size_t j = begin; j < end; ++j) idx.push_back(j);
  return select_columns(idx);
}

IntMatrix IntMatrix::row_range(std::size_t begin, std::size_t end) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = begin; i < end; ++i) idx.push_back(i);
  return select_rows(idx);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::scaled(const Integer& k) const {
  IntMatrix m = *this;
  for (auto& x : m.data_) x *= k;
  return m;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw DimensionError("apply: length mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::negate_column(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::combine_columns(std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                                const Integer& u, const Integer& v) {
  Integer x, y;
  for (std::size_t i = 0; i < rows_; ++i) {
    x = s * (*this)(i, a) + t * (*this)(i, b);
    y = u * (*this)(i, a) + v * (*this)(i, b);
    (*this)(i, a) = x;
    (*this)(i, b) = y;
  }
}

void IntMatrix::combine_rows(std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                             const Integer& u, const Integer& v) {
  Integer x, y;
  for (std::size_t j = 0; j < cols_; ++j) {
    x = s * (*this)(a, j) + t * (*this)(b, j);
    y = u * (*this)(a, j) + v * (*this)(b, j);
    (*this)(a, j) = x;
    (*this)(b, j) = y;
  }
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum: shapes differ");
  IntMatrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference: shapes differ");
  IntMatrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
  return m;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j).get_str();
    }
    os << ']';
  }
  return os << ']' << " (" << m.rows() << 'x' << m.cols() << ')';
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v(n, Integer(0));
  v[i] = 1;
  return v;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace ppr
