#pragma once

#include <cstddef>
#include <vector>

#include "ppr/complex.hpp"
#include "ppr/reduction.hpp"

namespace ppr {

/// ker f = common (+) span(complement), with common = ker f ∩ ker g.
struct KernelSplit {
  Lattice common;
  IntMatrix complement;
};

KernelSplit kernel_split(const IntMatrix& f, const IntMatrix& g);

/// Generators attached to a differential d = (d1, d2) : Z^m -> Z^n.
/// v12 is a basis of ker d1 ∩ ker d2, v12 with v1 (resp. v2) a basis of
/// ker d1 (resp. ker d2). The first `paired` columns of v1 and of v2 reduce
/// into W = q(ker d1) ∩ q(ker d2) and complete q(v12) to a basis of W;
/// `pairing` = (B; A) expresses q(v2 paired) = q(v12) B + q(v1 paired) A.
/// vbar completes q(ker d1) + q(ker d2) inside ker dbar and vbarc completes
/// ker dbar inside F_p^m (both as columns).
struct GeneratorSets {
  IntMatrix v12;
  IntMatrix v1;
  IntMatrix v2;
  FpMatrix vbar;
  FpMatrix vbarc;
  std::size_t paired = 0;
  FpMatrix pairing;
};

GeneratorSets generator_sets(const Differential& d, Prime p);

/// Separated diagram Q whose pullback is ker d, together with the maps
/// embed_i : Q_i generators -> Z^m. Generator blocks of Q_1, Qbar, Q_2 are
/// [v12 | paired | p v1 rest | p v2 rest]; the last block is Z/p in Q_1 and
/// the third block is Z/p in Q_2.
struct KernelPresentation {
  PullbackDiagram q;
  IntMatrix embed1;
  IntMatrix embed2;
  GeneratorSets sets;

  std::size_t common_count() const { return sets.v12.cols(); }
  std::size_t first_rest() const { return sets.v1.cols() - sets.paired; }
  std::size_t second_rest() const { return sets.v2.cols() - sets.paired; }
};

KernelPresentation canonical_kernel_presentation(const Differential& d, Prime p);

/// Image in Z^{2m} of the pullback of Q under embed1 (+) embed2.
Lattice embedded_kernel(const KernelPresentation& kp);

struct RewrittenDifferential {
  DiagramMorphism morphism;
  /// Columns whose image has a nonzero coordinate on a Z/p generator.
  std::size_t torsion_columns = 0;
};

/// Expresses the columns of prev : Z^l -> Z^m (landing in ker d) through the
/// pullback of Q. Throws ConsistencyError when a column cannot be expressed.
RewrittenDifferential rewrite_differential(const Differential& prev, const KernelPresentation& kp);

struct HomologyPresentation {
  SeparatedPresentation pres;
  KernelPresentation kernel;
  Differential incoming;
  std::size_t torsion_columns = 0;
};

/// Free diagram of rank dim C^{n-1} -> Q presenting H^n. Edge degrees use
/// zero differentials.
HomologyPresentation homology_presentation(const ChainComplexR& c, std::size_t n);

/// For generators w of T_2 = ker f_2: the coordinates of d1(w) on the basis
/// v12, v1 of ker d1 are divisible by p, and f_1(w) lies in pQ_1; and
/// symmetrically. Returns the number of vectors checked; a violation throws
/// ConsistencyError.
std::size_t check_divisibility(const HomologyPresentation& hp);

struct ClosedForm {
  RDiagram rd;
  std::size_t divisibility_checks = 0;
};

/// R-diagram of H^n assembled directly from the generator sets of the
/// rewritten differential, without the generic reductions.
ClosedForm closed_form_components(const ChainComplexR& c, std::size_t n);

struct DegreeResult {
  std::size_t degree = 0;
  RDiagram rd;
  std::size_t divisibility_checks = 0;
  std::size_t torsion_columns = 0;
  Trace trace;
};

DegreeResult homology_degree(const ChainComplexR& c, std::size_t n, bool trace = false);

RDiagram homology_rdiagram(const ChainComplexR& c, std::size_t n);

/// All degrees, in degree order. The parallel path distributes degrees over
/// OpenMP threads; the serial path is the reference.
std::vector<DegreeResult> homology_rdiagrams(const ChainComplexR& c, bool parallel, bool trace = false);

}  // namespace ppr
