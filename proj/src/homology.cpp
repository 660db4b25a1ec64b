#include "ppr/homology.hpp"

#include <exception>
#include <optional>

#include "ppr/error.hpp"
#include "ppr/lift.hpp"

namespace ppr {
namespace {

template <class Build>
auto rebuild(const char* where, Build&& build) {
  try {
    return build();
  } catch (const HypothesisError& e) {
    throw ConsistencyError(std::string(where) + ": " + e.what());
  }
}

// Change of basis of the complement U so that its first t columns reduce into
// W: the Smith form of { c : q(U c) in W } splits off the unit invariant factors.
IntMatrix adapt_to_overlap(const IntMatrix& u, const FpSubspace& w, std::size_t t) {
  const std::size_t k = u.cols();
  if (k == 0) return u;
  const Prime p = w.prime();
  const Lattice c = fp_preimage_lattice(FpMatrix::reduce(p, u), w);
  const SmithForm s = snf(c.basis());
  std::size_t ones = 0;
  while (ones < s.diagonal.size() && s.diagonal[ones] == 1) ++ones;
  if (ones != t) throw ConsistencyError("generator_sets: overlap dimension disagrees with the Smith form");
  return u * unimodular_inverse(s.U);
}

IntMatrix p_torsion_relations(std::size_t gens, std::size_t begin, std::size_t end, const Integer& p) {
  IntVector d(gens, Integer(0));
  for (std::size_t i = begin; i < end; ++i) d[i] = p;
  return IntMatrix::diagonal(gens, gens, d);
}

}  // namespace

KernelSplit kernel_split(const IntMatrix& f, const IntMatrix& g) {
  if (f.cols() != g.cols()) throw DimensionError("kernel_split: maps have different domains");
  const IntMatrix b = kernel_basis(f).basis();
  const HermiteForm h = hnf(g * b);
  return {kernel_basis(IntMatrix::vstack(f, g)), b * h.U.column_range(0, h.rank)};
}

GeneratorSets generator_sets(const Differential& d, Prime p) {
  if (d.d1.rows() != d.d2.rows() || d.d1.cols() != d.d2.cols())
    throw DimensionError("generator_sets: components have different shapes");
  const KernelSplit s1 = kernel_split(d.d1, d.d2);
  const KernelSplit s2 = kernel_split(d.d2, d.d1);
  const IntMatrix& v12 = s1.common.basis();
  const FpSubspace q1 = fp_image(FpMatrix::reduce(p, IntMatrix::hstack(v12, s1.complement)));
  const FpSubspace q2 = fp_image(FpMatrix::reduce(p, IntMatrix::hstack(v12, s2.complement)));
  const FpSubspace w = fp_intersection(q1, q2);
  const std::size_t r = v12.cols();
  if (w.dim() < r) throw ConsistencyError("generator_sets: common kernel does not reduce injectively");
  const std::size_t t = w.dim() - r;
  const IntMatrix v1 = adapt_to_overlap(s1.complement, w, t);
  const IntMatrix v2 = adapt_to_overlap(s2.complement, w, t);

  const FpMatrix basis_w = FpMatrix::reduce(p, IntMatrix::hstack(v12, v1.column_range(0, t)));
  const FpMatrix targets = FpMatrix::reduce(p, v2.column_range(0, t));
  std::vector<FpVector> cols;
  for (std::size_t j = 0; j < t; ++j) {
    auto x = fp_solve(basis_w, targets.column(j));
    if (!x) throw ConsistencyError("generator_sets: paired generators do not span the overlap");
    cols.push_back(std::move(*x));
  }
  const FpSubspace kbar = fp_kernel(FpMatrix::reduce(p, d.d1));
  return GeneratorSets{v12,
                       v1,
                       v2,
                       fp_relative_complement(q1 + q2, kbar).basis_columns(),
                       fp_complement(kbar).basis_columns(),
                       t,
                       FpMatrix::from_columns(p, r + t, cols)};
}

KernelPresentation canonical_kernel_presentation(const Differential& d, Prime p) {
  GeneratorSets sets = generator_sets(d, p);
  const std::size_t m = d.d1.cols();
  const std::size_t r = sets.v12.cols(), t = sets.paired;
  const std::size_t n1 = sets.v1.cols() - t, n2 = sets.v2.cols() - t;
  const std::size_t g = r + t + n1 + n2;
  const Integer pz = p.as_integer();

  FpMatrix p2 = FpMatrix::identity(p, g);
  for (std::size_t j = 0; j < t; ++j)
    for (std::size_t i = 0; i < r + t; ++i) p2.set(i, r + j, sets.pairing(i, j));

  const IntMatrix e1 = IntMatrix::hstack(
      IntMatrix::hstack(sets.v12, sets.v1.column_range(0, t)),
      IntMatrix::hstack(sets.v1.column_range(t, t + n1).scaled(pz), IntMatrix(m, n2)));
  const IntMatrix e2 = IntMatrix::hstack(
      IntMatrix::hstack(sets.v12, sets.v2.column_range(0, t)),
      IntMatrix::hstack(IntMatrix(m, n1), sets.v2.column_range(t, t + n2).scaled(pz)));

  PullbackDiagram q = rebuild("canonical_kernel_presentation", [&] {
    return PullbackDiagram::make(
        ZModulePresentation::with_relations(g, p_torsion_relations(g, r + t + n1, g, pz)),
        ZModulePresentation::with_relations(g, p_torsion_relations(g, r + t, r + t + n1, pz)), g,
        FpMatrix::identity(p, g), p2);
  });
  if (!is_separated(q).separated) throw ConsistencyError("canonical_kernel_presentation: Q is not separated");
  return KernelPresentation{std::move(q), e1, e2, std::move(sets)};
}

Lattice embedded_kernel(const KernelPresentation& kp) {
  return pullback_lattice(kp.q).image(IntMatrix::block_diagonal(kp.embed1, kp.embed2));
}

RewrittenDifferential rewrite_differential(const Differential& prev, const KernelPresentation& kp) {
  const PullbackDiagram& q = kp.q;
  const Prime p = q.p;
  const std::size_t m = kp.embed1.rows();
  const std::size_t l = prev.d1.cols();
  if (prev.d1.rows() != m || prev.d2.rows() != m || prev.d2.cols() != l)
    throw DimensionError("rewrite_differential: differential does not land in the kernel's ambient");

  const IntMatrix bq = pullback_lattice(q).basis();
  const IntMatrix emb = IntMatrix::block_diagonal(kp.embed1, kp.embed2) * bq;
  const IntMatrix target = IntMatrix::vstack(prev.d1, prev.d2);
  const auto c = solve_in_span(emb, target);
  if (!c) {
    for (std::size_t j = 0; j < l; ++j)
      if (!solve_in_span(emb, target.column(j)))
        throw ConsistencyError("rewrite_differential: column " + std::to_string(j) +
                               " cannot be expressed in the kernel presentation");
    throw ConsistencyError("rewrite_differential: differential cannot be expressed");
  }
  const IntMatrix uw = bq * *c;
  const std::size_t g1 = q.m1.generators(), g2 = q.m2.generators();
  RewrittenDifferential out{DiagramMorphism{PullbackDiagram::free(p, l), q, uw.row_range(0, g1),
                                            uw.row_range(g1, g1 + g2), FpMatrix(p, q.bar_dim, l)},
                            0};
  out.morphism.fbar = q.p1 * FpMatrix::reduce(p, out.morphism.f1);
  if (auto d = morphism_defects(out.morphism); !d.empty())
    throw ConsistencyError("rewrite_differential: " + d.front());

  const std::size_t head = kp.common_count() + kp.sets.paired;
  const std::size_t n1 = kp.first_rest(), n2 = kp.second_rest();
  for (std::size_t j = 0; j < l; ++j) {
    bool torsion = false;
    for (std::size_t i = head + n1; i < head + n1 + n2; ++i) torsion |= reduce_mod(out.morphism.f1(i, j), p) != 0;
    for (std::size_t i = head; i < head + n1; ++i) torsion |= reduce_mod(out.morphism.f2(i, j), p) != 0;
    out.torsion_columns += torsion;
  }
  return out;
}

HomologyPresentation homology_presentation(const ChainComplexR& c, std::size_t n) {
  if (n >= c.degrees()) throw DimensionError("homology_presentation: degree " + std::to_string(n) + " out of range");
  const ComplexReport report = validate_complex(c);
  if (!report.ok()) throw HypothesisError("homology_presentation: " + report.violations.front());
  KernelPresentation kp = canonical_kernel_presentation(c.outgoing(n), c.p);
  Differential incoming = c.incoming(n);
  RewrittenDifferential rw = rewrite_differential(incoming, kp);
  SeparatedPresentation pres =
      rebuild("homology_presentation", [&] { return SeparatedPresentation::make(std::move(rw.morphism)); });
  return HomologyPresentation{std::move(pres), std::move(kp), std::move(incoming), rw.torsion_columns};
}

std::size_t check_divisibility(const HomologyPresentation& hp) {
  const DiagramMorphism& f = hp.pres.f;
  const KernelPresentation& kp = hp.kernel;
  const Prime p = kp.q.p;
  const ZModulePresentation free = ZModulePresentation::free(f.f1.cols());
  std::size_t checked = 0;

  auto check = [&](int i, const Lattice& kernel_other, const IntMatrix& d, const IntMatrix& complement,
                   const IntMatrix& fi, const ZModulePresentation& qi) {
    if (kernel_other.rank() == 0) return;
    const std::string where = "divisibility (index " + std::to_string(i) + ")";
    const IntMatrix basis = IntMatrix::hstack(kp.sets.v12, complement);
    const auto coords = solve_in_span(basis, d * kernel_other.basis());
    if (!coords) throw ConsistencyError(where + ": value outside ker d" + std::to_string(i));
    for (std::size_t r = 0; r < coords->rows(); ++r)
      for (std::size_t j = 0; j < coords->cols(); ++j)
        if (reduce_mod((*coords)(r, j), p) != 0)
          throw ConsistencyError(where + ": coordinate " + (*coords)(r, j).get_str() + " is not divisible by p");
    const Lattice pq = Lattice::scaled_full(qi.generators(), p.as_integer()) + qi.relations();
    const IntMatrix images = fi * kernel_other.basis();
    for (std::size_t j = 0; j < images.cols(); ++j)
      if (!pq.contains(images.column(j))) throw ConsistencyError(where + ": image does not lie in pQ");
    checked += kernel_other.rank();
  };
  const Lattice t1 = kernel_of_map({free, kp.q.m1, f.f1});
  const Lattice t2 = kernel_of_map({free, kp.q.m2, f.f2});
  check(1, t2, hp.incoming.d1, kp.sets.v1, f.f1, kp.q.m1);
  check(2, t1, hp.incoming.d2, kp.sets.v2, f.f2, kp.q.m2);
  return checked;
}

ClosedForm closed_form_components(const ChainComplexR& c, std::size_t n) {
  const HomologyPresentation hp = homology_presentation(c, n);
  const std::size_t checks = check_divisibility(hp);
  const DiagramMorphism& f = hp.pres.f;
  const PullbackDiagram& q = hp.kernel.q;
  const Prime p = q.p;
  const Integer pz = p.as_integer();
  const std::size_t l = f.f1.cols();
  const ZModulePresentation free = ZModulePresentation::free(l);

  const Lattice t1 = kernel_of_map({free, q.m1, f.f1});
  const Lattice t2 = kernel_of_map({free, q.m2, f.f2});
  const FpSubspace tbar = fp_image(FpMatrix::reduce(p, IntMatrix::hstack(t1.basis(), t2.basis())));
  const FpSubspace ker_fbar = fp_kernel(f.fbar);
  const FpSubspace wbar = fp_relative_complement(tbar, ker_fbar);
  const FpSubspace wbar_c = fp_complement(ker_fbar);
  const IntMatrix w = wbar.basis_columns().lift();
  const IntMatrix wc = wbar_c.basis_columns().lift();

  auto relations = [&](const IntMatrix& fi, const Lattice& t_other, const ZModulePresentation& qi,
                       const IntMatrix& lifts) {
    const std::size_t g = qi.generators();
    return qi.relations() + Lattice::span(g, fi * lifts) + Lattice::span(g, fi * t_other.basis()) +
           Lattice::span(g, fi.scaled(pz));
  };
  const Lattice rel1 = relations(f.f1, t2, q.m1, wc);
  const Lattice rel2 = relations(f.f2, t1, q.m2, wc);
  // Any other integral lift of wbar_c gives the same quotients.
  IntMatrix shifted = wc;
  for (std::size_t i = 0; i < shifted.rows(); ++i)
    for (std::size_t j = 0; j < shifted.cols(); ++j) shifted(i, j) += pz * Integer(static_cast<long>(i + j + 1));
  if (!(relations(f.f1, t2, q.m1, shifted) == rel1) || !(relations(f.f2, t1, q.m2, shifted) == rel2))
    throw ConsistencyError("closed_form_components: components depend on the lift of wbar_c");

  const FpQuotient qf = fp_quotient(fp_image(f.fbar));
  RDiagram rd = rebuild("closed_form_components", [&] {
    return RDiagram{p, wbar.dim(),
                    PullbackDiagram::make(ZModulePresentation::normalize(q.m1.generators(), rel1),
                                          ZModulePresentation::normalize(q.m2.generators(), rel2),
                                          qf.projection.rows(), qf.projection * q.p1, qf.projection * q.p2),
                    f.f1 * w, f.f2 * w};
  });
  rd = minimize_components(rd);
  if (const Condition* bad = validate_rdiagram(rd).failed())
    throw ConsistencyError("closed_form_components: condition '" + bad->name + "' fails: " + bad->witness);
  return ClosedForm{std::move(rd), checks};
}

DegreeResult homology_degree(const ChainComplexR& c, std::size_t n, bool trace) {
  const HomologyPresentation hp = homology_presentation(c, n);
  const std::size_t checks = check_divisibility(hp);
  Trace stages;
  RDiagram rd = reduce_combined(hp.pres, trace ? &stages : nullptr);
  return DegreeResult{n, std::move(rd), checks, hp.torsion_columns, std::move(stages)};
}

RDiagram homology_rdiagram(const ChainComplexR& c, std::size_t n) { return homology_degree(c, n).rd; }

std::vector<DegreeResult> homology_rdiagrams(const ChainComplexR& c, bool parallel, bool trace) {
  const long count = static_cast<long>(c.degrees());
  std::vector<std::optional<DegreeResult>> slots(count);
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long n = 0; n < count; ++n) {
    try {
      slots[n] = homology_degree(c, static_cast<std::size_t>(n), trace);
    } catch (...) {
      errors[n] = std::current_exception();
    }
  }
  std::vector<DegreeResult> out;
  out.reserve(slots.size());
  for (long n = 0; n < count; ++n) {
    if (errors[n]) std::rethrow_exception(errors[n]);
    out.push_back(std::move(*slots[n]));
  }
  return out;
}

}  // namespace ppr
