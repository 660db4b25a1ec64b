#include "ppr/pullback.hpp"

#include <sstream>

#include "ppr/error.hpp"

namespace ppr {
namespace {

void require_same_prime(Prime a, Prime b) {
  if (!(a == b)) throw HypothesisError("elements over different p-pullback rings");
}

std::string vector_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

// { x : M x = 0 mod p } for an F_p matrix M, as an integer lattice.
Lattice lattice_kernel_mod_p(const FpMatrix& m) {
  return preimage_lattice(m.lift(), Lattice::scaled_full(m.rows(), m.prime().as_integer()));
}

bool is_full(const Lattice& l) { return l == Lattice::full(l.ambient_rank()); }

// { (a, b) : A a = B b mod p } as an integer lattice in Z^{cols A + cols B}.
Lattice matching_pairs(const FpMatrix& a, const FpMatrix& b) {
  return lattice_kernel_mod_p(FpMatrix::hstack(a, b.negated()));
}

}  // namespace

PPRElement PPRElement::make(Prime p, Integer r1, Integer r2) {
  if (reduce_mod(r1 - r2, p) != 0)
    throw HypothesisError("(" + r1.get_str() + ", " + r2.get_str() + ") is not in the p-pullback ring");
  return PPRElement{p, std::move(r1), std::move(r2)};
}

PPRElement operator+(const PPRElement& x, const PPRElement& y) {
  require_same_prime(x.p, y.p);
  return PPRElement::make(x.p, x.r1 + y.r1, x.r2 + y.r2);
}

PPRElement operator*(const PPRElement& x, const PPRElement& y) {
  require_same_prime(x.p, y.p);
  return PPRElement::make(x.p, x.r1 * y.r1, x.r2 * y.r2);
}

std::pair<IntVector, IntVector> act(const PPRElement& r, const IntVector& x, const IntVector& y) {
  std::pair<IntVector, IntVector> out{x, y};
  for (auto& v : out.first) v *= r.r1;
  for (auto& v : out.second) v *= r.r2;
  return out;
}

bool quotient_ring_check(Prime p) {
  const Integer pz = p.as_integer();
  // R as a lattice in Z^2, P_1 = (p,0)R and P_2 = (0,p)R.
  const IntMatrix ring_basis = IntMatrix::from_columns(2, {{1, 1}, {0, pz}});
  const Lattice ring = Lattice::span(2, ring_basis);
  IntMatrix ideal_gens(2, 4);
  for (std::size_t j = 0; j < 2; ++j) {
    const PPRElement g = PPRElement::make(p, ring_basis(0, j), ring_basis(1, j));
    const PPRElement a = PPRElement::make(p, pz, 0) * g;
    const PPRElement b = PPRElement::make(p, 0, pz) * g;
    ideal_gens.set_column(2 * j, {a.r1, a.r2});
    ideal_gens.set_column(2 * j + 1, {b.r1, b.r2});
  }
  const Lattice ideal = Lattice::span(2, ideal_gens);
  if (!ring.contains(ideal)) return false;
  const AbelianInvariants inv = ring.quotient_invariants(ideal);
  return inv.free_rank == 0 && inv.factors == IntVector{pz};
}

PullbackDiagram PullbackDiagram::make(ZModulePresentation m1, ZModulePresentation m2, std::size_t bar_dim,
                                      FpMatrix p1, FpMatrix p2) {
  if (!(p1.prime() == p2.prime())) throw DimensionError("PullbackDiagram: maps over different primes");
  if (p1.rows() != bar_dim || p2.rows() != bar_dim || p1.cols() != m1.generators() ||
      p2.cols() != m2.generators())
    throw DimensionError("PullbackDiagram: structure map shapes do not match the components");
  const Prime p = p1.prime();
  for (std::size_t j = 0; j < m1.relations().rank(); ++j)
    if (!is_zero(lift_vector(p1.apply(reduce_vector(m1.relations().basis().column(j), p)))))
      throw HypothesisError("PullbackDiagram: p1 does not vanish on the relations of M1");
  for (std::size_t j = 0; j < m2.relations().rank(); ++j)
    if (!is_zero(lift_vector(p2.apply(reduce_vector(m2.relations().basis().column(j), p)))))
      throw HypothesisError("PullbackDiagram: p2 does not vanish on the relations of M2");
  return PullbackDiagram{p, std::move(m1), std::move(m2), bar_dim, std::move(p1), std::move(p2)};
}

PullbackDiagram PullbackDiagram::free(Prime p, std::size_t rank) {
  return make(ZModulePresentation::free(rank), ZModulePresentation::free(rank), rank,
              FpMatrix::identity(p, rank), FpMatrix::identity(p, rank));
}

Lattice pullback_lattice(const PullbackDiagram& d) { return matching_pairs(d.p1, d.p2); }

SeparationReport is_separated(const PullbackDiagram& d) {
  SeparationReport r;
  const std::size_t r1 = fp_rank(d.p1);
  const std::size_t r2 = fp_rank(d.p2);
  if (r1 < d.bar_dim) r.witnesses.push_back("p1 has rank " + std::to_string(r1) + " < " + std::to_string(d.bar_dim));
  if (r2 < d.bar_dim) r.witnesses.push_back("p2 has rank " + std::to_string(r2) + " < " + std::to_string(d.bar_dim));
  r.preseparated = r1 == d.bar_dim && r2 == d.bar_dim;
  const Integer pz = d.p.as_integer();
  bool kernels_ok = true;
  const ZModulePresentation* comps[2] = {&d.m1, &d.m2};
  const FpMatrix* maps[2] = {&d.p1, &d.p2};
  for (int i = 0; i < 2; ++i) {
    const Lattice ker = lattice_kernel_mod_p(*maps[i]);
    const Lattice pm = Lattice::scaled_full(comps[i]->generators(), pz) + comps[i]->relations();
    if (ker == pm) continue;
    kernels_ok = false;
    for (std::size_t j = 0; j < ker.rank(); ++j) {
      const IntVector v = ker.basis().column(j);
      if (!pm.contains(v)) {
        r.witnesses.push_back("ker p" + std::to_string(i + 1) + " contains " + vector_string(v) +
                              " outside p*M" + std::to_string(i + 1));
        break;
      }
    }
  }
  r.separated = r.preseparated && kernels_ok;
  return r;
}

IntVector times_second_generator(Prime p, std::size_t a, const IntVector& v) {
  IntVector out(v.size(), Integer(0));
  for (std::size_t i = a; i < v.size(); ++i) out[i] = v[i] * p.as_integer();
  return out;
}

bool is_r_closed(Prime p, std::size_t a, const Lattice& l) {
  for (std::size_t j = 0; j < l.rank(); ++j)
    if (!l.contains(times_second_generator(p, a, l.basis().column(j)))) return false;
  return true;
}

LatticeRModule LatticeRModule::make(Prime p, std::size_t a, std::size_t b, const IntMatrix& generators,
                                    const Lattice& relations) {
  if (relations.ambient_rank() != a + b) throw DimensionError("LatticeRModule: relation ambient mismatch");
  if (!is_r_closed(p, a, relations)) throw HypothesisError("LatticeRModule: relations are not R-closed");
  const Lattice l = Lattice::span(a + b, generators.cols() ? generators : IntMatrix(a + b, 0)) + relations;
  if (!is_r_closed(p, a, l)) throw HypothesisError("LatticeRModule: lattice is not closed under the R-action");
  return LatticeRModule{p, a, b, l, relations};
}

LatticeRModule LatticeRModule::closure(Prime p, std::size_t a, std::size_t b, const IntMatrix& generators,
                                       const Lattice& relations) {
  IntMatrix gens = generators.cols() ? generators : IntMatrix(a + b, 0);
  IntMatrix shifted(a + b, gens.cols());
  for (std::size_t j = 0; j < gens.cols(); ++j) shifted.set_column(j, times_second_generator(p, a, gens.column(j)));
  return make(p, a, b, IntMatrix::hstack(gens, shifted), relations);
}

LatticeRModule pullback_group(const PullbackDiagram& d) {
  const Lattice rel = Lattice::direct_sum(d.m1.relations(), d.m2.relations());
  const Lattice l = pullback_lattice(d);
  if (!l.contains(rel)) throw ConsistencyError("pullback_group: relations fall outside the pullback");
  if (!is_r_closed(d.p, d.m1.generators(), l)) throw ConsistencyError("pullback_group: pullback is not R-closed");
  return LatticeRModule{d.p, d.m1.generators(), d.m2.generators(), l, rel};
}

Separation separate(const LatticeRModule& s) {
  if (!is_r_closed(s.p, s.a, s.lattice)) throw HypothesisError("separate: input is not closed under R");
  const Prime p = s.p;
  const IntMatrix& basis = s.lattice.basis();
  const std::size_t k = basis.cols();
  const std::size_t n = s.a + s.b;
  IntMatrix first(n, k), second(n, k);  // (p,0).b_j and (0,p).b_j
  for (std::size_t j = 0; j < k; ++j) {
    const IntVector v = basis.column(j);
    const IntVector w = times_second_generator(p, s.a, v);
    IntVector u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = v[i] * p.as_integer() - w[i];
    first.set_column(j, u);
    second.set_column(j, w);
  }
  const Lattice p1s = Lattice::span(n, first);
  const Lattice p2s = Lattice::span(n, second);
  const Lattice rel1 = Lattice::span(k, s.lattice.coordinates_of(p2s + s.relations));
  const Lattice rel2 = Lattice::span(k, s.lattice.coordinates_of(p1s + s.relations));
  const Lattice rel_bar = Lattice::span(k, s.lattice.coordinates_of(p1s + p2s + s.relations));
  const FpSubspace w = FpSubspace::span_of_columns(FpMatrix::reduce(p, rel_bar.basis()));
  const FpQuotient q = fp_quotient(w);

  Separation out{PullbackDiagram::make(ZModulePresentation::normalize(k, rel1), ZModulePresentation::normalize(k, rel2),
                                       q.projection.rows(), q.projection, q.projection),
                 basis};
  if (!is_separated(out.diagram).separated) throw ConsistencyError("separate: result is not separated");
  return out;
}

RModuleMap RModuleMap::from_blocks(const LatticeRModule& source, const LatticeRModule& target, const IntMatrix& g1,
                                   const IntMatrix& g2) {
  if (g1.rows() != target.a || g1.cols() != source.a || g2.rows() != target.b || g2.cols() != source.b)
    throw DimensionError("RModuleMap::from_blocks: block shapes do not match");
  return RModuleMap{source, target, IntMatrix::block_diagonal(g1, g2) * source.lattice.basis()};
}

bool is_r_linear(const RModuleMap& g) {
  const std::size_t k = g.source.lattice.rank();
  if (g.images.cols() != k || g.images.rows() != g.target.a + g.target.b)
    throw DimensionError("is_r_linear: image matrix has the wrong shape");
  for (std::size_t j = 0; j < k; ++j)
    if (!g.target.lattice.contains(g.images.column(j))) return false;
  // source relations must map into target relations
  const IntMatrix rel_coords = g.source.lattice.coordinates_of(g.source.relations);
  for (std::size_t j = 0; j < rel_coords.cols(); ++j)
    if (!g.target.relations.contains(g.images.apply(rel_coords.column(j)))) return false;
  // g((0,p) b_j) = (0,p) g(b_j) modulo target relations
  for (std::size_t j = 0; j < k; ++j) {
    const IntVector shifted = times_second_generator(g.source.p, g.source.a, g.source.lattice.basis().column(j));
    const IntVector lhs = g.images.apply(*g.source.lattice.coordinates(shifted));
    const IntVector rhs = times_second_generator(g.target.p, g.target.a, g.images.column(j));
    IntVector diff(lhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) diff[i] = lhs[i] - rhs[i];
    if (!g.target.relations.contains(diff)) return false;
  }
  return true;
}

std::vector<std::string> morphism_defects(const DiagramMorphism& m) {
  std::vector<std::string> defects;
  if (m.f1.rows() != m.target.m1.generators() || m.f1.cols() != m.source.m1.generators() ||
      m.f2.rows() != m.target.m2.generators() || m.f2.cols() != m.source.m2.generators() ||
      m.fbar.rows() != m.target.bar_dim || m.fbar.cols() != m.source.bar_dim) {
    defects.emplace_back("component shapes do not match the diagrams");
    return defects;
  }
  if (!check_map({m.source.m1, m.target.m1, m.f1})) defects.emplace_back("f1 is not well-defined");
  if (!check_map({m.source.m2, m.target.m2, m.f2})) defects.emplace_back("f2 is not well-defined");
  const Prime p = m.source.p;
  if (!(m.target.p1 * FpMatrix::reduce(p, m.f1) == m.fbar * m.source.p1))
    defects.emplace_back("square p1 f1 = fbar p1 does not commute");
  if (!(m.target.p2 * FpMatrix::reduce(p, m.f2) == m.fbar * m.source.p2))
    defects.emplace_back("square p2 f2 = fbar p2 does not commute");
  return defects;
}

DiagramMorphism separate_morphism(const RModuleMap& g, const Separation& src, const Separation& tgt) {
  if (!is_r_linear(g)) throw HypothesisError("separate_morphism: map is not R-linear");
  const Prime p = g.source.p;
  const Lattice& tl = g.target.lattice;
  const std::size_t ks = g.source.lattice.rank();
  IntMatrix c(tl.rank(), ks);
  for (std::size_t j = 0; j < ks; ++j) c.set_column(j, *tl.coordinates(g.images.column(j)));

  // A second lift of generator j of S_1 (resp. S_2) differs by an element of
  // P_2 S (resp. P_1 S); its image must project to the same element.
  for (std::size_t j = 0; j < ks; ++j) {
    const IntVector b = g.source.lattice.basis().column(j);
    const IntVector shift2 = times_second_generator(p, g.source.a, b);
    IntVector shift1(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) shift1[i] = b[i] * p.as_integer() - shift2[i];
    const IntVector alt2 = c.apply(*g.source.lattice.coordinates(shift2));
    const IntVector alt1 = c.apply(*g.source.lattice.coordinates(shift1));
    if (!tgt.diagram.m1.is_zero_element(alt2) || !tgt.diagram.m2.is_zero_element(alt1))
      throw ConsistencyError("separate_morphism: component depends on the chosen lift");
  }
  const FpMatrix section = fp_right_inverse(src.diagram.p1);
  DiagramMorphism m{src.diagram, tgt.diagram, c, c, tgt.diagram.p1 * FpMatrix::reduce(p, c) * section};
  if (auto d = morphism_defects(m); !d.empty()) throw ConsistencyError("separate_morphism: " + d.front());
  return m;
}

namespace {

Lattice component_kernel(const ZModulePresentation& s, const ZModulePresentation& t, const IntMatrix& f) {
  return kernel_of_map({s, t, f});
}

// { x : p_i x = 0 } inside the generator lattice
Lattice structure_kernel(const FpMatrix& pm) { return lattice_kernel_mod_p(pm); }

}  // namespace

bool is_mono(const DiagramMorphism& m) {
  const Prime p = m.source.p;
  const Lattice t1 = component_kernel(m.source.m1, m.target.m1, m.f1);
  const Lattice t2 = component_kernel(m.source.m2, m.target.m2, m.f2);
  // mu in the coordinates of bases of t1 and t2
  const FpMatrix mu = FpMatrix::hstack(m.source.p1 * FpMatrix::reduce(p, t1.basis()),
                                       (m.source.p2 * FpMatrix::reduce(p, t2.basis())).negated());
  const Lattice mu_kernel = lattice_kernel_mod_p(mu);
  const Lattice in_generators = mu_kernel.image(IntMatrix::block_diagonal(t1.basis(), t2.basis()));
  return Lattice::direct_sum(m.source.m1.relations(), m.source.m2.relations()).contains(in_generators);
}

bool is_mono_direct(const DiagramMorphism& m) {
  const Lattice src = pullback_lattice(m.source);
  const Lattice src_rel = Lattice::direct_sum(m.source.m1.relations(), m.source.m2.relations());
  const ZModulePresentation group = ZModulePresentation::normalize(src.rank(), Lattice::span(src.rank(), src.coordinates_of(src_rel)));
  const ZModulePresentation target = ZModulePresentation::normalize(
      m.target.m1.generators() + m.target.m2.generators(),
      Lattice::direct_sum(m.target.m1.relations(), m.target.m2.relations()));
  const IntMatrix induced = IntMatrix::block_diagonal(m.f1, m.f2) * src.basis();
  const Lattice ker = kernel_of_map({group, target, induced});
  return ker == group.relations();
}

MonoConditions mono_conditions(const DiagramMorphism& m) {
  const Prime p = m.source.p;
  const Lattice t1 = component_kernel(m.source.m1, m.target.m1, m.f1);
  const Lattice t2 = component_kernel(m.source.m2, m.target.m2, m.f2);
  MonoConditions c;
  c.kernels_avoid_structure_kernels =
      m.source.m1.relations().contains(lattice_intersection(t1, structure_kernel(m.source.p1))) &&
      m.source.m2.relations().contains(lattice_intersection(t2, structure_kernel(m.source.p2)));
  const FpSubspace i1 = fp_image(m.source.p1 * FpMatrix::reduce(p, t1.basis()));
  const FpSubspace i2 = fp_image(m.source.p2 * FpMatrix::reduce(p, t2.basis()));
  c.kernel_images_disjoint = fp_intersection(i1, i2).dim() == 0;
  return c;
}

EpiReport epi_conditions(const DiagramMorphism& m) {
  const Prime p = m.source.p;
  const Integer pz = p.as_integer();
  EpiReport r;
  const Lattice t_rel = Lattice::direct_sum(m.target.m1.relations(), m.target.m2.relations());
  const Lattice image = pullback_lattice(m.source).image(IntMatrix::block_diagonal(m.f1, m.f2)) + t_rel;
  r.direct = image.contains(pullback_lattice(m.target));

  auto component_epi = [](const IntMatrix& f, const ZModulePresentation& t) {
    return is_full(Lattice::span(t.generators(), f.cols() ? f : IntMatrix(t.generators(), 0)) + t.relations());
  };
  const bool f1_epi = component_epi(m.f1, m.target.m1);
  const bool f2_epi = component_epi(m.f2, m.target.m2);
  const bool fbar_epi = fp_rank(m.fbar) == m.target.bar_dim;

  const FpSubspace ker_fbar = fp_kernel(m.fbar);
  auto c_epi = [&](const ZModulePresentation& s, const ZModulePresentation& t, const IntMatrix& f, const FpMatrix& pm) {
    const Lattice ker = component_kernel(s, t, f);
    return fp_image(pm * FpMatrix::reduce(p, ker.basis())) == ker_fbar;
  };
  r.cond1 = f1_epi && f2_epi &&
            (c_epi(m.source.m1, m.target.m1, m.f1, m.source.p1) || c_epi(m.source.m2, m.target.m2, m.f2, m.source.p2));

  // M_i -> pullback of (Mbar -> Nbar <- N_i), m |-> (p_i m, f_i m)
  auto canonical_epi = [&](const ZModulePresentation& t, const FpMatrix& src_p, const FpMatrix& tgt_p,
                           const IntMatrix& f) {
    const std::size_t dm = m.source.bar_dim;
    const Lattice slack = Lattice::direct_sum(Lattice::scaled_full(dm, pz), t.relations());
    const Lattice target_pairs = matching_pairs(m.fbar, tgt_p);
    const IntMatrix gens = IntMatrix::vstack(src_p.lift(), f);
    const Lattice reached = Lattice::span(dm + t.generators(), gens.cols() ? gens : IntMatrix(dm + t.generators(), 0)) + slack;
    return reached.contains(target_pairs);
  };
  const bool m2_onto = canonical_epi(m.target.m2, m.source.p2, m.target.p2, m.f2);
  const bool m1_onto = canonical_epi(m.target.m1, m.source.p1, m.target.p1, m.f1);
  r.cond2 = f1_epi && m2_onto;
  r.cond3 = f2_epi && m1_onto;
  r.cond4 = fbar_epi && m1_onto && m2_onto;
  return r;
}

}  // namespace ppr
