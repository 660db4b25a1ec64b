#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppr/error.hpp"
#include "ppr/homology.hpp"
#include "ppr/oracle.hpp"
#include "ppr/random.hpp"

using namespace ppr;

namespace {

SeparatedPresentation multiplication_presentation(Prime p, long r1, long r2) {
  const LatticeRModule r = pullback_group(PullbackDiagram::free(p, 1));
  const Separation s = separate(r);
  return SeparatedPresentation::make(separate_morphism(
      RModuleMap::from_blocks(r, r, IntMatrix::from_rows({{r1}}), IntMatrix::from_rows({{r2}})), s, s));
}

}  // namespace

TEST_CASE("presentation oracle examples") {
  const Prime p(2);
  CHECK(underlying_invariants_of_presentation(multiplication_presentation(p, 1, 1)).is_trivial());
  const PullbackDiagram r = PullbackDiagram::free(p, 1);
  const SeparatedPresentation just_r = SeparatedPresentation::make(
      {PullbackDiagram::free(p, 0), r, IntMatrix(1, 0), IntMatrix(1, 0), FpMatrix(p, 1, 0)});
  CHECK(underlying_invariants_of_presentation(just_r) == GroupInvariants{2, {}});
  CHECK(underlying_invariants_of_presentation(multiplication_presentation(p, 2, 0)) == GroupInvariants{1, {}});
  // R / pR has order p^2.
  CHECK(underlying_invariants_of_presentation(multiplication_presentation(Prime(3), 3, 3)) == GroupInvariants{0, {3, 3}});
}

TEST_CASE("R-diagram oracle examples") {
  const Prime p(3);
  const RDiagram zero{p, 0, PullbackDiagram::free(p, 0), IntMatrix(0, 0), IntMatrix(0, 0)};
  CHECK(underlying_invariants_of_rdiagram(zero).is_trivial());
  const RDiagram free3{p, 0, PullbackDiagram::free(p, 3), IntMatrix(3, 0), IntMatrix(3, 0)};
  CHECK(underlying_invariants_of_rdiagram(free3) == GroupInvariants{6, {}});
  const RDiagram off{p, 1, PullbackDiagram::free(p, 1), IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{0}})};
  CHECK_THROWS_AS(underlying_invariants_of_rdiagram(off), HypothesisError);
}

TEST_CASE("invariants_equal") {
  const GroupInvariants a{1, {}};
  CHECK(invariants_equal(a, a));
  CHECK_FALSE(invariants_equal(GroupInvariants{1, {}}, GroupInvariants{0, {2}}));
}

TEST_CASE("integer homology of small complexes") {
  const Prime p(2);
  const ChainComplexR c = ChainComplexR::from_differentials(p, {{IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{0}})}});
  CHECK(integer_homology_invariants(c, 0) == GroupInvariants{1, {}});
  CHECK(integer_homology_invariants(c, 1) == GroupInvariants{1, {}});
  const ChainComplexR pp = ChainComplexR::from_differentials(p, {{IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{2}})}});
  CHECK(integer_homology_invariants(pp, 1) == GroupInvariants{0, {2, 2}});
}

TEST_CASE("oracle, reduction and integer homology agree on random complexes") {
  Rng rng(4242);
  for (int t = 0; t < 100; ++t) {
    const Prime p(std::array<std::uint64_t, 3>{2, 3, 5}[t % 3]);
    const ChainComplexR c = random_complex(rng, p, {4, 3, 3});
    for (std::size_t n = 0; n < c.degrees(); ++n) {
      const HomologyPresentation hp = homology_presentation(c, n);
      const GroupInvariants expected = integer_homology_invariants(c, n);
      CHECK(underlying_invariants_of_presentation(hp.pres) == expected);
      CHECK(underlying_invariants_of_rdiagram(reduce_combined(hp.pres)) == expected);
    }
  }
}
