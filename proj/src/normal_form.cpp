#include "ppr/normal_form.hpp"

#include <algorithm>
#include <ostream>

#include "ppr/error.hpp"

namespace ppr {
namespace {

struct Bezout {
  Integer g, s, t;
};

Bezout xgcd(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Replaces columns (c, j) of h (and u) so that h(i, c) becomes gcd and h(i, j) becomes 0.
void eliminate_in_row(IntMatrix& h, IntMatrix& u, std::size_t i, std::size_t c, std::size_t j) {
  const Integer a = h(i, c);
  const Integer b = h(i, j);
  if (b == 0) return;
  if (a == 0) {
    h.swap_columns(c, j);
    u.swap_columns(c, j);
    return;
  }
  if (b % a == 0) {
    const Integer q = b / a;
    h.add_column_multiple(j, c, -q);
    u.add_column_multiple(j, c, -q);
    return;
  }
  const Bezout z = xgcd(a, b);
  const Integer ag = a / z.g;
  const Integer bg = b / z.g;
  h.combine_columns(c, j, z.s, z.t, -bg, ag);
  u.combine_columns(c, j, z.s, z.t, -bg, ag);
}

void eliminate_in_column(IntMatrix& d, IntMatrix& u, std::size_t j, std::size_t r, std::size_t i) {
  const Integer a = d(r, j);
  const Integer b = d(i, j);
  if (b == 0) return;
  if (a == 0) {
    d.swap_rows(r, i);
    u.swap_rows(r, i);
    return;
  }
  if (b % a == 0) {
    const Integer q = b / a;
    d.add_row_multiple(i, r, -q);
    u.add_row_multiple(i, r, -q);
    return;
  }
  const Bezout z = xgcd(a, b);
  const Integer ag = a / z.g;
  const Integer bg = b / z.g;
  d.combine_rows(r, i, z.s, z.t, -bg, ag);
  u.combine_rows(r, i, z.s, z.t, -bg, ag);
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out;
  out.H = m;
  out.U = IntMatrix::identity(m.cols());
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  const std::size_t n = m.cols();
  std::size_t col = 0;
  for (std::size_t i = 0; i < m.rows() && col < n; ++i) {
    for (std::size_t j = col + 1; j < n; ++j) eliminate_in_row(h, u, i, col, j);
    if (h(i, col) == 0) continue;
    if (h(i, col) < 0) {
      h.negate_column(col);
      u.negate_column(col);
    }
    for (std::size_t k = 0; k < col; ++k) {
      const Integer q = floor_div(h(i, k), h(i, col));
      h.add_column_multiple(k, col, -q);
      u.add_column_multiple(k, col, -q);
    }
    out.pivot_rows.push_back(i);
    ++col;
  }
  out.rank = col;
  return out;
}

SmithForm snf(const IntMatrix& m) {
  SmithForm out;
  out.D = m;
  out.U = IntMatrix::identity(m.rows());
  out.V = IntMatrix::identity(m.cols());
  IntMatrix& d = out.D;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    bool found = false;
    std::size_t pr = t, pc = t;
    Integer best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (d(i, j) == 0) continue;
        Integer a = abs(d(i, j));
        if (!found || a < best) {
          best = a;
          pr = i;
          pc = j;
          found = true;
        }
      }
    if (!found) break;
    d.swap_rows(t, pr);
    out.U.swap_rows(t, pr);
    d.swap_columns(t, pc);
    out.V.swap_columns(t, pc);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) eliminate_in_column(d, out.U, t, t, i);
      for (std::size_t j = t + 1; j < cols; ++j) eliminate_in_row(d, out.V, t, t, j);
      bool column_clear = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (d(i, t) != 0) column_clear = false;
      if (!column_clear) continue;
      // divisibility of the trailing block by the pivot
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      d.add_row_multiple(t, bad, 1);
      out.U.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      out.U.negate_row(t);
    }
  }
  out.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = d(t, t);
  return out;
}

std::ostream& operator<<(std::ostream& os, const AbelianInvariants& inv) {
  bool first = true;
  for (const auto& f : inv.factors) {
    os << (first ? "" : " + ") << "Z/" << f.get_str();
    first = false;
  }
  if (inv.free_rank > 0) {
    os << (first ? "" : " + ") << "Z";
    if (inv.free_rank > 1) os << '^' << inv.free_rank;
    first = false;
  }
  if (first) os << '0';
  return os;
}

AbelianInvariants invariants_of_relations(std::size_t generators, const IntMatrix& relations) {
  if (relations.rows() != generators)
    throw DimensionError("invariants_of_relations: relation vectors have wrong length");
  const SmithForm s = snf(relations);
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (const auto& x : s.diagonal) {
    if (x == 0) continue;
    ++nonzero;
    if (x != 1) inv.factors.push_back(x);
  }
  inv.free_rank = generators - nonzero;
  return inv;
}

}  // namespace ppr
