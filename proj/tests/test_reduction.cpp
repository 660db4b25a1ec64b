#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppr/error.hpp"
#include "ppr/oracle.hpp"
#include "ppr/random.hpp"
#include "ppr/reduction.hpp"

using namespace ppr;

namespace {

SeparatedPresentation multiplication_presentation(Prime p, long r1, long r2) {
  const LatticeRModule r = pullback_group(PullbackDiagram::free(p, 1));
  const Separation s = separate(r);
  return SeparatedPresentation::make(separate_morphism(
      RModuleMap::from_blocks(r, r, IntMatrix::from_rows({{r1}}), IntMatrix::from_rows({{r2}})), s, s));
}

bool same_components(const RDiagram& a, const RDiagram& b) {
  return a.k_dim == b.k_dim && a.s.bar_dim == b.s.bar_dim && a.s.m1.invariants() == b.s.m1.invariants() &&
         a.s.m2.invariants() == b.s.m2.invariants();
}

}  // namespace

TEST_CASE("free diagram stub") {
  const Prime p(2);
  CHECK(free_presentation_stub(p, 0).bar_dim == 0);
  CHECK(is_separated(free_presentation_stub(p, 3)).separated);
}

TEST_CASE("R modulo (2,0)R") {
  const Prime p(2);
  const SeparatedPresentation pres = multiplication_presentation(p, 2, 0);
  CHECK(underlying_invariants_of_presentation(pres) == GroupInvariants{1, {}});
  for (const RDiagram& rd : {reduce_combined(pres), reduce_sequential(pres)}) {
    CHECK(rd.k_dim == 0);
    CHECK(rd.s.m1.invariants() == AbelianInvariants{0, {2}});
    CHECK(rd.s.m2.invariants() == AbelianInvariants{1, {}});
    CHECK(rd.s.bar_dim == 1);
    CHECK(validate_rdiagram(rd).ok());
    CHECK(underlying_invariants_of_rdiagram(rd) == GroupInvariants{1, {}});
  }
}

TEST_CASE("identity presentation reduces to zero") {
  const RDiagram rd = reduce_combined(multiplication_presentation(Prime(3), 1, 1));
  CHECK(rd.k_dim == 0);
  CHECK(rd.s.bar_dim == 0);
  CHECK(rd.s.m1.invariants().is_trivial());
  CHECK(rd.s.m2.invariants().is_trivial());
}

TEST_CASE("reduce_K on a free source gives an elementary source") {
  const Prime p(3);
  const SeparatedPresentation pres = multiplication_presentation(p, 3, 3);
  const SeparatedPresentation out = reduce_K(pres);
  CHECK(out.k().m1.invariants() == AbelianInvariants{0, {3}});
  CHECK(out.k().p1 == FpMatrix::identity(p, 1));
  CHECK(underlying_invariants_of_presentation(out) == underlying_invariants_of_presentation(pres));
}

TEST_CASE("reduce_barf with injective fbar empties Kbar") {
  const SeparatedPresentation out = reduce_barf(reduce_K(multiplication_presentation(Prime(5), 1, 6)));
  CHECK(out.k().bar_dim == 0);
  CHECK(out.f.fbar.is_zero());
}

TEST_CASE("reduce_monos with zero map removes K") {
  const SeparatedPresentation pres = reduce_K(multiplication_presentation(Prime(2), 0, 0));
  const SeparatedPresentation out = reduce_monos(pres);
  CHECK(out.k().bar_dim == 0);
  CHECK(underlying_invariants_of_presentation(out) == GroupInvariants{2, {}});
}

TEST_CASE("hypothesis failures name the condition") {
  const SeparatedPresentation pres = multiplication_presentation(Prime(3), 1, 1);
  const SubDiagram bad{IntMatrix(pres.k().m1.generators(), 0), FpSubspace::full(Prime(3), pres.k().bar_dim),
                       IntMatrix(pres.k().m2.generators(), 0)};
  try {
    (void)quotient_presentation(pres, bad, QuotientMode::Full);
    FAIL("expected a hypothesis failure");
  } catch (const HypothesisError& e) {
    CHECK(std::string(e.what()).find("u1 surjective") != std::string::npos);
  }
  CHECK_THROWS_AS(reduce_monos(multiplication_presentation(Prime(3), 1, 1)), HypothesisError);
}

TEST_CASE("validation catches broken R-diagrams") {
  const Prime p(2);
  const ZModulePresentation z4 = ZModulePresentation::with_relations(1, IntMatrix::from_rows({{4}}));
  const PullbackDiagram s = PullbackDiagram::make(z4, z4, 1, FpMatrix::identity(p, 1), FpMatrix::identity(p, 1));
  const RDiagram zero_q{p, 1, s, IntMatrix(1, 1), IntMatrix::from_rows({{2}})};
  const ValidationReport r = validate_rdiagram(zero_q);
  REQUIRE(r.failed());
  CHECK(r.failed()->name == "q1 mono");

  const PullbackDiagram t = PullbackDiagram::make(ZModulePresentation::free(1), ZModulePresentation::free(1), 1,
                                                  FpMatrix(p, 1, 1), FpMatrix::identity(p, 1));
  const RDiagram not_epi{p, 0, t, IntMatrix(1, 0), IntMatrix(1, 0)};
  REQUIRE(validate_rdiagram(not_epi).failed());
  CHECK(validate_rdiagram(not_epi).failed()->name == "p1 epi");
}

TEST_CASE("random presentations: oracle preservation, equivalence, idempotence") {
  Rng rng(2024);
  for (int t = 0; t < 150; ++t) {
    const Prime p(std::array<std::uint64_t, 3>{2, 3, 5}[t % 3]);
    const SeparatedPresentation pres = random_separated_presentation(rng, p);
    const GroupInvariants before = underlying_invariants_of_presentation(pres);

    const SeparatedPresentation a = reduce_K(pres);
    CHECK(a.k().m1 == a.k().m2);
    CHECK(a.k().p1 == FpMatrix::identity(p, a.k().bar_dim));
    CHECK(underlying_invariants_of_presentation(a) == before);
    const SeparatedPresentation b = reduce_barf(a);
    CHECK(b.f.fbar.is_zero());
    CHECK(underlying_invariants_of_presentation(b) == before);
    const SeparatedPresentation c = reduce_monos(b);
    CHECK(kernel_of_map({c.k().m1, c.s().m1, c.f.f1}) == c.k().m1.relations());
    CHECK(kernel_of_map({c.k().m2, c.s().m2, c.f.f2}) == c.k().m2.relations());
    CHECK(underlying_invariants_of_presentation(c) == before);

    const RDiagram comb = reduce_combined(pres);
    const RDiagram seq = reduce_sequential(pres);
    CHECK(validate_rdiagram(comb).ok());
    CHECK(underlying_invariants_of_rdiagram(comb) == before);
    CHECK(same_components(comb, seq));
    CHECK(same_components(reduce_combined(as_presentation(comb)), comb));
  }
}
