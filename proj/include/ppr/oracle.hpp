#pragma once

#include <cstddef>

#include "ppr/complex.hpp"
#include "ppr/normal_form.hpp"
#include "ppr/reduction.hpp"

namespace ppr {

/// Underlying abelian group of a module, by free rank and invariant factors.
using GroupInvariants = AbelianInvariants;

/// Group invariants of coker f, computed from lattices in the generator
/// coordinates of S_1 (+) S_2.
GroupInvariants underlying_invariants_of_presentation(const SeparatedPresentation& pres);

/// Group invariants of pullback(S) / {(q_1 k, q_2 k)}. Throws HypothesisError
/// when the columns of (q_1; q_2) do not lie in the pullback.
GroupInvariants underlying_invariants_of_rdiagram(const RDiagram& rd);

bool invariants_equal(const GroupInvariants& a, const GroupInvariants& b);

/// H^n of the complex computed over the integers: C^k is the lattice
/// { (x, y) : x = y mod p } in Z^m (+) Z^m with the differential d1 (+) d2.
GroupInvariants integer_homology_invariants(const ChainComplexR& c, std::size_t n);

}  // namespace ppr
