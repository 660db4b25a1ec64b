#include "ppr/fp.hpp"

#include <ostream>
#include <string>

#include "ppr/error.hpp"

namespace ppr {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (value >= (std::uint64_t{1} << 31)) throw HypothesisError("modulus too large: " + std::to_string(value));
  if (!is_prime(value)) throw HypothesisError("modulus is not prime: " + std::to_string(value));
}

std::uint64_t reduce_mod(const Integer& x, Prime p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p.value()));
  return r.get_ui();
}

FpVector reduce_vector(const IntVector& v, Prime p) {
  FpVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = reduce_mod(v[i], p);
  return out;
}

IntVector lift_vector(const FpVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<unsigned long>(v[i]);
  return out;
}

std::uint64_t inverse_mod(std::uint64_t a, Prime p) {
  const std::uint64_t m = p.value();
  a %= m;
  if (a == 0) throw DimensionError("inverse_mod: zero has no inverse");
  // Fermat
  std::uint64_t result = 1, base = a, e = m - 2;
  while (e) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return result;
}

FpMatrix::FpMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(Prime p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::reduce(Prime p, const IntMatrix& m) {
  FpMatrix out(p, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.data_[i * m.cols() + j] = reduce_mod(m(i, j), p);
  return out;
}

FpMatrix FpMatrix::from_columns(Prime p, std::size_t rows, const std::vector<FpVector>& cols) {
  FpMatrix m(p, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionError("FpMatrix::from_columns: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

FpMatrix FpMatrix::hstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows_ != b.rows_) throw DimensionError("FpMatrix::hstack: row counts differ");
  FpMatrix m(a.p_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) m.set(i, j, a(i, j));
    for (std::size_t j = 0; j < b.cols_; ++j) m.set(i, a.cols_ + j, b(i, j));
  }
  return m;
}

FpMatrix FpMatrix::vstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols_ != b.cols_) throw DimensionError("FpMatrix::vstack: column counts differ");
  FpMatrix m(a.p_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) {
    for (std::size_t i = 0; i < a.rows_; ++i) m.set(i, j, a(i, j));
    for (std::size_t i = 0; i < b.rows_; ++i) m.set(a.rows_ + i, j, b(i, j));
  }
  return m;
}

FpVector FpMatrix::column(std::size_t j) const {
  FpVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

FpVector FpMatrix::row(std::size_t i) const {
  return FpVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

FpMatrix FpMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  FpMatrix m(p_, rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t i = 0; i < rows_; ++i) m.set(i, k, (*this)(i, idx[k]));
  return m;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

FpMatrix FpMatrix::negated() const {
  FpMatrix m = *this;
  for (auto& x : m.data_) x = (p_.value() - x) % p_.value();
  return m;
}

FpVector FpMatrix::apply(const FpVector& v) const {
  if (v.size() != cols_) throw DimensionError("FpMatrix::apply: length mismatch");
  const std::uint64_t p = p_.value();
  FpVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = (acc + (*this)(i, j) * v[j]) % p;
    out[i] = acc;
  }
  return out;
}

bool FpMatrix::is_zero() const {
  for (auto x : data_)
    if (x != 0) return false;
  return true;
}

IntMatrix FpMatrix::lift() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = static_cast<unsigned long>((*this)(i, j));
  return m;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("FpMatrix product: inner dimensions differ");
  if (!(a.p_ == b.p_)) throw DimensionError("FpMatrix product: different primes");
  const std::uint64_t p = a.p_.value();
  FpMatrix m(a.p_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        m.data_[i * b.cols_ + j] = (m.data_[i * b.cols_ + j] + x * b(k, j)) % p;
    }
  return m;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("FpMatrix sum: shapes differ");
  FpMatrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = (m.data_[k] + b.data_[k]) % a.p_.value();
  return m;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) { return a + b.negated(); }

std::ostream& operator<<(std::ostream& os, const FpMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << "] mod " << m.prime().value();
}

RowEchelon rref(const FpMatrix& m) {
  const std::uint64_t p = m.prime().value();
  RowEchelon out{m, {}};
  FpMatrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t r = row;
    while (r < a.rows() && a(r, col) == 0) ++r;
    if (r == a.rows()) continue;
    if (r != row)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto t = a(r, j);
        a.set(r, j, a(row, j));
        a.set(row, j, t);
      }
    const std::uint64_t inv = inverse_mod(a(row, col), m.prime());
    for (std::size_t j = 0; j < a.cols(); ++j) a.set(row, j, a(row, j) * inv % p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const std::uint64_t f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a.set(i, j, (a(i, j) + (p - f) * a(row, j)) % p);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

FpSubspace::FpSubspace(Prime p, std::size_t ambient) : ambient_(ambient), basis_(p, 0, ambient) {}

FpSubspace FpSubspace::span_of_rows(const FpMatrix& m) {
  FpSubspace s(m.prime(), m.cols());
  RowEchelon e = rref(m);
  std::vector<FpVector> rows;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) rows.push_back(e.reduced.row(i));
  s.basis_ = FpMatrix::from_columns(m.prime(), m.cols(), rows).transpose();
  s.pivots_ = std::move(e.pivots);
  return s;
}

FpSubspace FpSubspace::span_of_columns(const FpMatrix& m) { return span_of_rows(m.transpose()); }

FpSubspace FpSubspace::full(Prime p, std::size_t ambient) {
  return span_of_rows(FpMatrix::identity(p, ambient));
}

FpVector FpSubspace::reduce(FpVector v) const {
  if (v.size() != ambient_) throw DimensionError("FpSubspace::reduce: length mismatch");
  const std::uint64_t p = prime().value();
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::uint64_t f = v[pivots_[k]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) v[j] = (v[j] + (p - f) * basis_(k, j)) % p;
  }
  return v;
}

bool FpSubspace::contains(const FpVector& v) const {
  for (auto x : reduce(v))
    if (x != 0) return false;
  return true;
}

bool FpSubspace::contains(const FpSubspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

FpSubspace FpSubspace::operator+(const FpSubspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("FpSubspace sum: ambient mismatch");
  return span_of_rows(FpMatrix::vstack(basis_, other.basis_));
}

std::size_t fp_rank(const FpMatrix& m) { return rref(m).pivots.size(); }

FpSubspace fp_kernel(const FpMatrix& m) {
  const std::uint64_t p = m.prime().value();
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<FpVector> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = (p - e.reduced(k, free)) % p;
    vectors.push_back(std::move(v));
  }
  return FpSubspace::span_of_columns(FpMatrix::from_columns(m.prime(), m.cols(), vectors));
}

FpSubspace fp_image(const FpMatrix& m) { return FpSubspace::span_of_columns(m); }

std::optional<FpVector> fp_solve(const FpMatrix& m, const FpVector& b) {
  if (b.size() != m.rows()) throw DimensionError("fp_solve: right-hand side length mismatch");
  FpMatrix aug = FpMatrix::hstack(m, FpMatrix::from_columns(m.prime(), m.rows(), {b}));
  const RowEchelon e = rref(aug);
  FpVector x(m.cols(), 0);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;
    x[e.pivots[k]] = e.reduced(k, m.cols());
  }
  return x;
}

FpSubspace fp_complement(const FpSubspace& w) {
  std::vector<bool> is_pivot(w.ambient_dim(), false);
  for (auto c : w.pivots()) is_pivot[c] = true;
  std::vector<FpVector> vectors;
  for (std::size_t j = 0; j < w.ambient_dim(); ++j) {
    if (is_pivot[j]) continue;
    FpVector v(w.ambient_dim(), 0);
    v[j] = 1;
    vectors.push_back(std::move(v));
  }
  return FpSubspace::span_of_columns(FpMatrix::from_columns(w.prime(), w.ambient_dim(), vectors));
}

FpSubspace fp_relative_complement(const FpSubspace& inner, const FpSubspace& outer) {
  if (!outer.contains(inner)) throw DimensionError("fp_relative_complement: inner not inside outer");
  FpSubspace acc = inner;
  std::vector<FpVector> chosen;
  for (std::size_t i = 0; i < outer.dim(); ++i) {
    FpVector v = outer.basis_rows().row(i);
    if (acc.contains(v)) continue;
    chosen.push_back(v);
    acc = acc + FpSubspace::span_of_columns(FpMatrix::from_columns(outer.prime(), outer.ambient_dim(), {v}));
  }
  return FpSubspace::span_of_columns(FpMatrix::from_columns(outer.prime(), outer.ambient_dim(), chosen));
}

FpSubspace fp_intersection(const FpSubspace& a, const FpSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("fp_intersection: ambient mismatch");
  // A x = B y
  const FpMatrix ac = a.basis_columns();
  const FpMatrix stacked = FpMatrix::hstack(ac, b.basis_columns().negated());
  const FpSubspace k = fp_kernel(stacked);
  const FpMatrix kc = k.basis_columns();
  FpMatrix x(a.prime(), a.dim(), kc.cols());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < kc.cols(); ++j) x.set(i, j, kc(i, j));
  return FpSubspace::span_of_columns(ac * x);
}

FpSubspace fp_preimage(const FpMatrix& m, const FpSubspace& w) {
  if (m.rows() != w.ambient_dim()) throw DimensionError("fp_preimage: target mismatch");
  // M x - W y = 0, project onto x
  const FpMatrix stacked = FpMatrix::hstack(m, w.basis_columns().negated());
  const FpMatrix kc = fp_kernel(stacked).basis_columns();
  FpMatrix x(m.prime(), m.cols(), kc.cols());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < kc.cols(); ++j) x.set(i, j, kc(i, j));
  return FpSubspace::span_of_columns(x);
}

FpQuotient fp_quotient(const FpSubspace& w) {
  const std::size_t n = w.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto c : w.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free.push_back(j);
  FpQuotient q{FpMatrix(w.prime(), free.size(), n), FpMatrix(w.prime(), n, free.size())};
  for (std::size_t i = 0; i < n; ++i) {
    FpVector e(n, 0);
    e[i] = 1;
    const FpVector r = w.reduce(e);
    for (std::size_t k = 0; k < free.size(); ++k) q.projection.set(k, i, r[free[k]]);
  }
  for (std::size_t k = 0; k < free.size(); ++k) q.section.set(free[k], k, 1);
  return q;
}

FpMatrix fp_right_inverse(const FpMatrix& m) {
  std::vector<FpVector> cols;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    FpVector e(m.rows(), 0);
    e[i] = 1;
    auto x = fp_solve(m, e);
    if (!x) throw HypothesisError("fp_right_inverse: matrix is not surjective");
    cols.push_back(std::move(*x));
  }
  return FpMatrix::from_columns(m.prime(), m.cols(), cols);
}

}  // namespace ppr
