#include "ppr/zmodule.hpp"

#include "ppr/error.hpp"

namespace ppr {

ZModulePresentation ZModulePresentation::normalize(std::size_t generators, Lattice relations) {
  if (relations.ambient_rank() != generators)
    throw DimensionError("ZModulePresentation: relation lattice lives in the wrong rank");
  ZModulePresentation m;
  m.generators_ = generators;
  m.invariants_ = relations.cokernel_invariants();
  m.relations_ = std::move(relations);
  return m;
}

ZModulePresentation ZModulePresentation::free(std::size_t generators) {
  return normalize(generators, Lattice::zero(generators));
}

ZModulePresentation ZModulePresentation::with_relations(std::size_t generators, const IntMatrix& relations) {
  return normalize(generators, Lattice::span(generators, relations));
}

ZModulePresentation ZModulePresentation::from_invariants(const AbelianInvariants& inv) {
  const std::size_t n = inv.factors.size() + inv.free_rank;
  IntVector d(n, Integer(0));
  for (std::size_t i = 0; i < inv.factors.size(); ++i) d[i] = inv.factors[i];
  return with_relations(n, IntMatrix::diagonal(n, n, d));
}

bool ZModulePresentation::same_element(const IntVector& a, const IntVector& b) const {
  if (a.size() != generators_ || b.size() != generators_)
    throw DimensionError("same_element: vector length differs from generator count");
  IntVector diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  return relations_.contains(diff);
}

bool check_map(const ModuleMap& f) {
  if (f.matrix.rows() != f.target.generators() || f.matrix.cols() != f.source.generators())
    throw DimensionError("check_map: matrix shape does not match the presentations");
  const Lattice& rel = f.source.relations();
  for (std::size_t j = 0; j < rel.rank(); ++j)
    if (!f.target.relations().contains(f.matrix.apply(rel.basis().column(j)))) return false;
  return true;
}

QuotientResult quotient(const ZModulePresentation& m, const IntMatrix& sub) {
  if (sub.cols() > 0 && sub.rows() != m.generators())
    throw DimensionError("quotient: submodule generators have the wrong length");
  const Lattice extra = Lattice::span(m.generators(), sub.cols() > 0 ? sub : IntMatrix(m.generators(), 0));
  ZModulePresentation q = ZModulePresentation::normalize(m.generators(), m.relations() + extra);
  ModuleMap proj{m, q, IntMatrix::identity(m.generators())};
  return {std::move(q), std::move(proj)};
}

Lattice kernel_of_map(const ModuleMap& f) {
  if (!check_map(f)) throw HypothesisError("kernel_of_map: map is not well-defined");
  return preimage_lattice(f.matrix, f.target.relations());
}

Lattice p_torsion(const ZModulePresentation& m, const Integer& p) {
  return preimage_lattice(IntMatrix::identity(m.generators()).scaled(p), m.relations());
}

Minimized minimize(const ZModulePresentation& m) {
  const std::size_t n = m.generators();
  const IntMatrix& rel = m.relations().basis();
  const SmithForm s = snf(rel);
  // y = U x; relations become diag(d) in y-coordinates.
  std::vector<std::size_t> torsion, free_idx;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer d = i < s.diagonal.size() ? s.diagonal[i] : Integer(0);
    if (d == 1) continue;
    (d == 0 ? free_idx : torsion).push_back(i);
  }
  std::vector<std::size_t> kept = torsion;
  kept.insert(kept.end(), free_idx.begin(), free_idx.end());

  const IntMatrix u_inv = unimodular_inverse(s.U);
  IntVector factors;
  for (auto i : torsion) factors.push_back(s.diagonal[i]);
  IntVector diag(kept.size(), Integer(0));
  for (std::size_t k = 0; k < torsion.size(); ++k) diag[k] = factors[k];
  Minimized out;
  out.module = ZModulePresentation::with_relations(kept.size(), IntMatrix::diagonal(kept.size(), kept.size(), diag));
  out.to_new = s.U.select_rows(kept);
  out.to_old = u_inv.select_columns(kept);
  if (!(out.module.invariants() == m.invariants()))
    throw ConsistencyError("minimize: invariants changed under change of generators");
  return out;
}

}  // namespace ppr
