#include "ppr/oracle.hpp"

#include "ppr/error.hpp"

namespace ppr {
namespace {

// { (x, y) : a x = b y mod p }
Lattice matching_lattice(Prime p, std::size_t rows, const IntMatrix& a, const IntMatrix& b) {
  return preimage_lattice(IntMatrix::hstack(a, b.scaled(-1)), Lattice::scaled_full(rows, p.as_integer()));
}

Lattice diagram_lattice(const PullbackDiagram& d) {
  const Lattice l = matching_lattice(d.p, d.bar_dim, d.p1.lift(), d.p2.lift());
  return l + Lattice::direct_sum(d.m1.relations(), d.m2.relations());
}

Lattice congruent_pairs(Prime p, std::size_t m) {
  return matching_lattice(p, m, IntMatrix::identity(m), IntMatrix::identity(m));
}

}  // namespace

GroupInvariants underlying_invariants_of_presentation(const SeparatedPresentation& pres) {
  const PullbackDiagram& k = pres.f.source;
  const PullbackDiagram& s = pres.f.target;
  const Lattice ls = diagram_lattice(s);
  const Lattice rel = Lattice::direct_sum(s.m1.relations(), s.m2.relations());
  const Lattice sub = diagram_lattice(k).image(IntMatrix::block_diagonal(pres.f.f1, pres.f.f2)) + rel;
  if (!ls.contains(sub)) throw HypothesisError("oracle: image of K does not lie in the pullback of S");
  return ls.quotient_invariants(sub);
}

GroupInvariants underlying_invariants_of_rdiagram(const RDiagram& rd) {
  const Lattice ls = diagram_lattice(rd.s);
  const std::size_t n = rd.s.m1.generators() + rd.s.m2.generators();
  const Lattice sub = Lattice::span(n, IntMatrix::vstack(rd.q1, rd.q2)) +
                      Lattice::direct_sum(rd.s.m1.relations(), rd.s.m2.relations());
  if (!ls.contains(sub)) throw HypothesisError("oracle: diagonal image of K does not lie in the pullback of S");
  return ls.quotient_invariants(sub);
}

bool invariants_equal(const GroupInvariants& a, const GroupInvariants& b) { return a == b; }

GroupInvariants integer_homology_invariants(const ChainComplexR& c, std::size_t n) {
  const Differential out = c.outgoing(n);
  const Differential in = c.incoming(n);
  const std::size_t m = c.ranks.at(n);
  const Lattice cycles = lattice_intersection(congruent_pairs(c.p, m), kernel_basis(IntMatrix::block_diagonal(out.d1, out.d2)));
  const Lattice cn = n == 0 ? Lattice::zero(0) : congruent_pairs(c.p, c.ranks[n - 1]);
  const Lattice boundaries =
      n == 0 ? Lattice::zero(2 * m) : cn.image(IntMatrix::block_diagonal(in.d1, in.d2));
  if (!cycles.contains(boundaries)) throw HypothesisError("oracle: boundaries are not cycles");
  return cycles.quotient_invariants(boundaries);
}

}  // namespace ppr
