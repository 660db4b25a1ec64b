#pragma once

#include <cstddef>
#include <utility>

#include "ppr/fp.hpp"
#include "ppr/lattice.hpp"

namespace ppr {

/// Finitely generated abelian group Z^generators / relations.
class ZModulePresentation {
 public:
  ZModulePresentation() = default;

  static ZModulePresentation normalize(std::size_t generators, Lattice relations);
  static ZModulePresentation free(std::size_t generators);
  /// Z^generators / (relations' columns).
  static ZModulePresentation with_relations(std::size_t generators, const IntMatrix& relations);
  /// Z/f_1 (+) ... (+) Z/f_k (+) Z^free_rank in that generator order.
  static ZModulePresentation from_invariants(const AbelianInvariants& inv);

  std::size_t generators() const { return generators_; }
  const Lattice& relations() const { return relations_; }
  const AbelianInvariants& invariants() const { return invariants_; }
  std::size_t free_rank() const { return invariants_.free_rank; }
  const IntVector& invariant_factors() const { return invariants_.factors; }

  /// Generator-coordinate vectors represent equal elements.
  bool same_element(const IntVector& a, const IntVector& b) const;
  bool is_zero_element(const IntVector& a) const { return relations_.contains(a); }

  friend bool operator==(const ZModulePresentation&, const ZModulePresentation&) = default;

 private:
  std::size_t generators_ = 0;
  Lattice relations_;
  AbelianInvariants invariants_;
};

/// Homomorphism given by its matrix on generators (target gens x source gens).
struct ModuleMap {
  ZModulePresentation source;
  ZModulePresentation target;
  IntMatrix matrix;
};

/// True iff every source relation is sent into the target relations.
bool check_map(const ModuleMap& f);

struct QuotientResult {
  ZModulePresentation module;
  ModuleMap projection;
};

/// M / <sub>: same generators, relations extended by the columns of `sub`.
QuotientResult quotient(const ZModulePresentation& m, const IntMatrix& sub);

/// { x : f(x) = 0 } as a lattice of generator coordinates; it always contains
/// the source relations. Throws HypothesisError for an ill-defined map.
Lattice kernel_of_map(const ModuleMap& f);

/// Generator coordinates of M[p] = { x : p x = 0 } (contains the relations).
Lattice p_torsion(const ZModulePresentation& m, const Integer& p);

/// Change of generators to Smith form: trivial generators dropped, torsion
/// generators first (ascending factors) then free ones.
struct Minimized {
  ZModulePresentation module;
  /// new coordinates = to_new * old coordinates
  IntMatrix to_new;
  /// old coordinates of the new generators
  IntMatrix to_old;
};

Minimized minimize(const ZModulePresentation& m);

}  // namespace ppr
