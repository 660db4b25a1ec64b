#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "ppr/int_matrix.hpp"

namespace ppr {

/// Column Hermite normal form: H = M * U with U unimodular.
///
/// H is lower echelon by columns: the first `rank` columns are nonzero, column j
/// has its first nonzero entry (the pivot, always positive) in row pivot_rows[j],
/// pivot rows strictly increase, and every entry of a pivot row left of the
/// pivot lies in [0, pivot). Remaining columns are zero. The nonzero columns
/// are therefore a canonical basis of the column span of M.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

HermiteForm hnf(const IntMatrix& m);

/// Smith normal form: D = U * M * V, U and V unimodular, D diagonal with
/// d_1 | d_2 | ... and every d_i >= 0 (zeros last).
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// min(rows, cols) diagonal entries of D.
  IntVector diagonal;
};

SmithForm snf(const IntMatrix& m);

/// Isomorphism type of a finitely generated abelian group:
/// Z^free_rank (+) Z/f_1 (+) ... with 1 < f_1 | f_2 | ...
struct AbelianInvariants {
  std::size_t free_rank = 0;
  IntVector factors;

  bool is_trivial() const { return free_rank == 0 && factors.empty(); }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

std::ostream& operator<<(std::ostream& os, const AbelianInvariants& inv);

/// Invariants of Z^generators / (column span of relations).
AbelianInvariants invariants_of_relations(std::size_t generators, const IntMatrix& relations);

}  // namespace ppr
