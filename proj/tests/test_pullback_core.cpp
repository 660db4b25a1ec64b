#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppr/error.hpp"
#include "ppr/pullback.hpp"

using namespace ppr;

TEST_CASE("ring elements and the quotient by P_1 + P_2") {
  const Prime p(3);
  CHECK_THROWS_AS(PPRElement::make(p, 1, 2), HypothesisError);
  const PPRElement x = PPRElement::make(p, 4, 1);
  CHECK((x * x).r1 == 16);
  CHECK((x + x).bar() == 2);
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 101u}) CHECK(quotient_ring_check(Prime(q)));
}

TEST_CASE("separation of R itself") {
  const Prime p(2);
  const LatticeRModule r = pullback_group(PullbackDiagram::free(p, 1));
  const Separation s = separate(r);
  CHECK(s.diagram.m1.invariants() == AbelianInvariants{1, {}});
  CHECK(s.diagram.m2.invariants() == AbelianInvariants{1, {}});
  CHECK(s.diagram.bar_dim == 1);
}

TEST_CASE("separation of the ideal P_1") {
  const Prime p(2);
  const LatticeRModule ideal = LatticeRModule::closure(p, 1, 1, IntMatrix::from_rows({{2}, {0}}), Lattice::zero(2));
  const Separation s = separate(ideal);
  CHECK(s.diagram.m1.invariants() == AbelianInvariants{1, {}});
  CHECK(s.diagram.m2.invariants() == AbelianInvariants{0, {2}});
  CHECK(s.diagram.bar_dim == 1);
  CHECK(is_separated(s.diagram).separated);
}

TEST_CASE("non-separated diagram reports a witness") {
  const Prime p(3);
  const PullbackDiagram d = PullbackDiagram::make(ZModulePresentation::free(1), ZModulePresentation::free(1), 1,
                                                  FpMatrix::reduce(p, IntMatrix::from_rows({{0}})),
                                                  FpMatrix::identity(p, 1));
  const SeparationReport r = is_separated(d);
  CHECK_FALSE(r.preseparated);
  CHECK_FALSE(r.separated);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("structure maps must kill relations") {
  const Prime p(3);
  CHECK_THROWS_AS(PullbackDiagram::make(ZModulePresentation::with_relations(1, IntMatrix::from_rows({{2}})),
                                        ZModulePresentation::free(1), 1, FpMatrix::identity(p, 1),
                                        FpMatrix::identity(p, 1)),
                  HypothesisError);
}

TEST_CASE("identity morphism is mono and epi") {
  const Prime p(5);
  const LatticeRModule r = pullback_group(PullbackDiagram::free(p, 2));
  const Separation s = separate(r);
  const RModuleMap g = RModuleMap::from_blocks(r, r, IntMatrix::identity(2), IntMatrix::identity(2));
  const DiagramMorphism m = separate_morphism(g, s, s);
  CHECK(morphism_defects(m).empty());
  CHECK(is_mono(m));
  CHECK(is_mono_direct(m));
  CHECK(mono_conditions(m).holds());
  const EpiReport e = epi_conditions(m);
  CHECK(e.direct);
  CHECK(e.any_condition());
}

TEST_CASE("multiplication by p on R is mono but not epi") {
  const Prime p(3);
  const LatticeRModule r = pullback_group(PullbackDiagram::free(p, 1));
  const Separation s = separate(r);
  const IntMatrix three = IntMatrix::from_rows({{3}});
  const DiagramMorphism m = separate_morphism(RModuleMap::from_blocks(r, r, three, three), s, s);
  CHECK(is_mono(m));
  CHECK(is_mono_direct(m));
  CHECK(mono_conditions(m).holds());
  const EpiReport e = epi_conditions(m);
  CHECK_FALSE(e.direct);
  CHECK_FALSE(e.any_condition());
}

#include "ppr/random.hpp"
#include "ppr/reduction.hpp"
#include "support/embed.hpp"

namespace {

bool same_diagram_shape(const PullbackDiagram& a, const PullbackDiagram& b) {
  return a.bar_dim == b.bar_dim && a.m1.invariants() == b.m1.invariants() && a.m2.invariants() == b.m2.invariants();
}

Prime cycle_prime(int t) { return Prime(std::array<std::uint64_t, 3>{2, 3, 5}[t % 3]); }

}  // namespace

TEST_CASE("ring arithmetic examples") {
  const Prime p(2);
  const PPRElement x = PPRElement::make(p, 2, 0) * PPRElement::make(p, 0, 2);
  CHECK(x.r1 == 0);
  CHECK(x.r2 == 0);
  const PPRElement y = PPRElement::make(p, 3, 1) + PPRElement::make(p, 1, 3);
  CHECK(y.r1 == 4);
  CHECK(y.r2 == 4);
  const auto [a, b] = act(PPRElement::make(p, 1, 1), {5, 6}, {7});
  CHECK(a == IntVector{5, 6});
  CHECK(b == IntVector{7});
}

TEST_CASE("pullback group examples") {
  const Prime p(3);
  const LatticeRModule r = pullback_group(PullbackDiagram::free(p, 1));
  CHECK(r.lattice == Lattice::span(2, IntMatrix::from_rows({{1, 0}, {1, 3}})));
  const PullbackDiagram no_bar = PullbackDiagram::make(ZModulePresentation::free(1), ZModulePresentation::free(1), 0,
                                                       FpMatrix(p, 0, 1), FpMatrix(p, 0, 1));
  CHECK(pullback_group(no_bar).lattice == Lattice::full(2));
  const ZModulePresentation z3 = ZModulePresentation::with_relations(1, IntMatrix::from_rows({{3}}));
  const LatticeRModule diag =
      pullback_group(PullbackDiagram::make(z3, z3, 1, FpMatrix::identity(p, 1), FpMatrix::identity(p, 1)));
  CHECK(diag.lattice.quotient_invariants(diag.relations) == AbelianInvariants{0, {3}});
}

TEST_CASE("separating the zero module") {
  const Prime p(2);
  const Separation s = separate(LatticeRModule::make(p, 1, 1, IntMatrix(2, 0), Lattice::zero(2)));
  CHECK(s.diagram.m1.generators() == 0);
  CHECK(s.diagram.bar_dim == 0);
}

TEST_CASE("separated morphism of multiplication by (p,0)") {
  const Prime p(3);
  const LatticeRModule r = pullback_group(PullbackDiagram::free(p, 1));
  const Separation s = separate(r);
  const DiagramMorphism m =
      separate_morphism(RModuleMap::from_blocks(r, r, IntMatrix::from_rows({{3}}), IntMatrix::from_rows({{0}})), s, s);
  // f_1 = p on S_1 = Z, f_2 = 0 on S_2 = Z, fbar = 0.
  CHECK(m.fbar.is_zero());
  CHECK(check_map({s.diagram.m2, s.diagram.m2, m.f2}));
  for (std::size_t j = 0; j < m.f2.cols(); ++j) CHECK(s.diagram.m2.is_zero_element(m.f2.column(j)));
  for (std::size_t j = 0; j < m.f1.cols(); ++j) {
    IntVector expected = unit_vector(m.f1.rows(), j);
    for (auto& x : expected) x *= 3;
    CHECK(s.diagram.m1.same_element(m.f1.column(j), expected));
  }
  const DiagramMorphism zero =
      separate_morphism(RModuleMap::from_blocks(r, r, IntMatrix::from_rows({{0}}), IntMatrix::from_rows({{0}})), s, s);
  CHECK(zero.f1.is_zero());
  CHECK(zero.fbar.is_zero());
}

TEST_CASE("non R-linear maps are rejected") {
  const Prime p(2);
  const LatticeRModule r = pullback_group(PullbackDiagram::free(p, 1));
  const RModuleMap swap{r, r, IntMatrix::from_rows({{1, 2}, {1, 0}})};
  CHECK_FALSE(is_r_linear(swap));
  CHECK_THROWS_AS(separate_morphism(swap, separate(r), separate(r)), HypothesisError);
}

TEST_CASE("zero map out of the diagonal Z/2 is not mono") {
  const Prime p(2);
  const ZModulePresentation z2 = ZModulePresentation::with_relations(1, IntMatrix::from_rows({{2}}));
  const PullbackDiagram k = PullbackDiagram::make(z2, z2, 1, FpMatrix::identity(p, 1), FpMatrix::identity(p, 1));
  const PullbackDiagram t = PullbackDiagram::free(p, 1);
  const DiagramMorphism m{k, t, IntMatrix(1, 1), IntMatrix(1, 1), FpMatrix(p, 1, 1)};
  CHECK(morphism_defects(m).empty());
  CHECK_FALSE(is_mono(m));
  CHECK_FALSE(is_mono_direct(m));
  CHECK_FALSE(mono_conditions(m).holds());
}

TEST_CASE("separate inverts pullback_group on random separated diagrams") {
  Rng rng(8);
  for (int t = 0; t < 150; ++t) {
    const Prime p = cycle_prime(t);
    const std::size_t a = rng() % 3, b = rng() % 3;
    const LatticeRModule s = random_r_module(rng, p, a, b);
    const Separation sep = separate(s);
    CHECK(is_separated(sep.diagram).separated);
    const LatticeRModule back = pullback_group(sep.diagram);
    // pullback of the separation, mapped through the lattice basis, is S again
    const std::size_t k = sep.lattice_basis.cols();
    const IntMatrix to_ambient = IntMatrix::hstack(sep.lattice_basis, IntMatrix(a + b, k));
    const Lattice first = back.lattice.image(to_ambient);
    CHECK(first + s.relations == s.lattice);
    CHECK(same_diagram_shape(separate(back).diagram, sep.diagram));
  }
}

TEST_CASE("separated diagrams are unique up to isomorphism") {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const Prime p = cycle_prime(t);
    const LatticeRModule s = random_r_module(rng, p, rng() % 4, rng() % 4);
    CHECK(same_diagram_shape(separate(testing::reembed(rng, s)).diagram, separate(testing::reembed(rng, s)).diagram));
  }
}

TEST_CASE("mono and epi criteria against direct computation") {
  Rng rng(77);
  int monos = 0, epis = 0;
  for (int t = 0; t < 200; ++t) {
    const SeparatedPresentation pres = random_separated_presentation(rng, cycle_prime(t));
    const DiagramMorphism& m = pres.f;
    const bool direct = is_mono_direct(m);
    CHECK(is_mono(m) == direct);
    CHECK(mono_conditions(m).holds() == direct);
    monos += direct;
    const EpiReport e = epi_conditions(m);
    if (e.any_condition()) CHECK(e.direct);
    epis += e.direct;
  }
  CHECK(monos > 10);
  CHECK(epis > 10);
}
