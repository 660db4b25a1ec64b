#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ppr/error.hpp"
#include "ppr/fp.hpp"
#include "ppr/lattice.hpp"
#include "ppr/normal_form.hpp"

using namespace ppr;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool divides(const Integer& a, const Integer& b) { return a == 0 ? b == 0 : b % a == 0; }

}  // namespace

TEST_CASE("hermite form of a single row") {
  const HermiteForm f = hnf(IntMatrix::from_rows({{2, 4}}));
  CHECK(f.H == IntMatrix::from_rows({{2, 0}}));
  CHECK(f.rank == 1);
  CHECK(IntMatrix::from_rows({{2, 4}}) * f.U == f.H);
}

TEST_CASE("smith form of diag(2,3)") {
  const SmithForm s = snf(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(s.diagonal == IntVector{1, 6});
}

TEST_CASE("smith form transforms and divisibility on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, r, c, 9);
    const SmithForm s = snf(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(determinant(s.U) * determinant(s.U) == 1);
    CHECK(determinant(s.V) * determinant(s.V) == 1);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) CHECK(divides(s.diagonal[i], s.diagonal[i + 1]));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
  }
}

TEST_CASE("hermite form is canonical under column operations") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix m = random_matrix(rng, 4, 3, 6);
    const IntMatrix u = IntMatrix::from_rows({{1, 2, 0}, {0, 1, -3}, {0, 0, 1}});
    CHECK(Lattice::span(4, m) == Lattice::span(4, m * u));
    const HermiteForm f = hnf(m);
    CHECK(m * f.U == f.H);
  }
}

TEST_CASE("kernel, intersection, preimage, solve") {
  CHECK(kernel_basis(IntMatrix::from_rows({{2, -1}})) == Lattice::span(2, IntMatrix::from_rows({{1}, {2}})));
  const Lattice a = Lattice::scaled_full(1, 2), b = Lattice::scaled_full(1, 3);
  CHECK(lattice_intersection(a, b) == Lattice::scaled_full(1, 6));
  const Lattice pre = preimage_lattice(IntMatrix::from_rows({{1, 1}}), Lattice::scaled_full(1, 2));
  CHECK(pre == Lattice::span(2, IntMatrix::from_rows({{1, 0}, {1, 2}})));
  const auto x = solve_in_span(IntMatrix::from_rows({{2, 0}, {0, 3}}), IntVector{4, 9});
  REQUIRE(x);
  CHECK(*x == IntVector{2, 3});
  CHECK_FALSE(solve_in_span(IntMatrix::from_rows({{2, 0}, {0, 3}}), IntVector{1, 0}));
}

TEST_CASE("kernel and image ranks add up") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix m = random_matrix(rng, 3, 5, 4);
    const Lattice k = kernel_basis(m);
    CHECK((m * k.basis()).is_zero());
    CHECK(k.is_saturated());
    CHECK(k.rank() + Lattice::span(3, m).rank() == 5);
  }
}

TEST_CASE("quotient invariants") {
  CHECK(Lattice::full(2).quotient_invariants(Lattice::span(2, IntMatrix::from_rows({{2, 0}, {0, 3}}))) ==
        AbelianInvariants{0, {6}});
  CHECK(Lattice::zero(2).cokernel_invariants() == AbelianInvariants{2, {}});
}

TEST_CASE("determinant of a singular and a unimodular matrix") {
  CHECK(determinant(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(determinant(IntMatrix::from_rows({{2, 1}, {1, 1}})) == 1);
}

TEST_CASE("prime validation") {
  CHECK_THROWS_AS(Prime(4), HypothesisError);
  CHECK_THROWS_AS(Prime(1), HypothesisError);
  CHECK(Prime(7).value() == 7);
}

TEST_CASE("linear algebra over F_p") {
  const Prime p(2);
  const FpMatrix m = FpMatrix::reduce(p, IntMatrix::from_rows({{1, 1}}));
  CHECK(fp_kernel(m) == FpSubspace::span_of_columns(FpMatrix::reduce(p, IntMatrix::from_rows({{1}, {1}}))));
  const FpSubspace w = FpSubspace::span_of_columns(FpMatrix::reduce(p, IntMatrix::from_rows({{1}, {1}})));
  CHECK(fp_complement(w) == FpSubspace::span_of_columns(FpMatrix::reduce(p, IntMatrix::from_rows({{0}, {1}}))));
  const FpQuotient q = fp_quotient(w);
  CHECK(fp_kernel(q.projection) == w);
  CHECK(q.projection * q.section == FpMatrix::identity(p, 1));
}

TEST_CASE("rank-nullity and right inverse over F_p") {
  std::mt19937_64 rng(5);
  const Prime p(5);
  for (int t = 0; t < 100; ++t) {
    const FpMatrix m = FpMatrix::reduce(p, random_matrix(rng, 3, 5, 10));
    CHECK(fp_rank(m) + fp_kernel(m).dim() == 5);
    if (fp_rank(m) == 3) CHECK(m * fp_right_inverse(m) == FpMatrix::identity(p, 3));
    const FpSubspace a = fp_image(FpMatrix::reduce(p, random_matrix(rng, 4, 2, 10)));
    const FpSubspace b = fp_image(FpMatrix::reduce(p, random_matrix(rng, 4, 2, 10)));
    CHECK(a.dim() + b.dim() == (a + b).dim() + fp_intersection(a, b).dim());
  }
}
