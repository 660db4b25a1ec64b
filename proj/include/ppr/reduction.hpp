#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ppr/pullback.hpp"

namespace ppr {

/// Morphism f : K -> S of separated diagrams presenting coker f.
/// K has structure maps q_i, S has structure maps p_i.
struct SeparatedPresentation {
  DiagramMorphism f;

  /// Throws HypothesisError unless both diagrams are separated and f is a
  /// well-defined morphism with commuting squares.
  static SeparatedPresentation make(DiagramMorphism f);

  const PullbackDiagram& k() const { return f.source; }
  const PullbackDiagram& s() const { return f.target; }
};

/// (Z^rank, F_p^rank, Z^rank; reduction, reduction)
PullbackDiagram free_presentation_stub(Prime p, std::size_t rank);

/// (F_p^d, F_p^d, F_p^d; id, id) with F_p^d presented as Z^d / pZ^d.
PullbackDiagram elementary_diagram(Prime p, std::size_t d);

/// Sub-diagram of K: generator-coordinate vectors (columns) in K_1 and K_2
/// and a subspace of Kbar.
struct SubDiagram {
  IntMatrix l1;
  FpSubspace lbar;
  IntMatrix l2;
};

enum class QuotientMode {
  /// u_1, u_2 surjective and fbar injective on Lbar.
  Full,
  /// u_2 surjective, f_2(L_2) = 0 and fbar(Lbar) = 0; only S_1 changes.
  SecondVanishing,
  /// Mirror image of SecondVanishing; only S_2 changes.
  FirstVanishing,
  /// u_1, u_2 surjective; used for the single-shot reduction.
  Combined,
};

/// K/L -> S/f(L). Hypotheses of the mode are checked and a violation throws
/// HypothesisError naming the condition.
SeparatedPresentation quotient_presentation(const SeparatedPresentation& pres, const SubDiagram& l, QuotientMode mode);

/// True when each q_i : K_i -> Kbar has kernel exactly rel(K_i).
bool has_elementary_source(const SeparatedPresentation& pres);

/// Rewrites a presentation with elementary source in terms of
/// K = (F_p^d, F_p^d, F_p^d; id, id).
SeparatedPresentation rebase(const SeparatedPresentation& pres);

/// Quotient by (ker q_1, 0, ker q_2) followed by rebase.
SeparatedPresentation reduce_K(const SeparatedPresentation& pres);
/// Quotient by the preimages of a complement of ker fbar; afterwards fbar = 0.
SeparatedPresentation reduce_barf(const SeparatedPresentation& pres);
/// Requires fbar = 0; afterwards f_1 and f_2 are injective.
SeparatedPresentation reduce_monos(const SeparatedPresentation& pres);

/// Normal form (K; S_1, Sbar, S_2) with K an F_p-space mapped by q_i into S_i.
struct RDiagram {
  Prime p;
  std::size_t k_dim = 0;
  PullbackDiagram s;
  IntMatrix q1;  // S_1 generators x k_dim
  IntMatrix q2;  // S_2 generators x k_dim
};

struct Condition {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct ValidationReport {
  std::vector<Condition> conditions;
  bool ok() const;
  const Condition* failed() const;
};

ValidationReport validate_rdiagram(const RDiagram& rd);

/// The presentation (F_p^d, F_p^d, F_p^d; id, id) -> S with f_i = q_i, fbar = 0.
SeparatedPresentation as_presentation(const RDiagram& rd);

/// Changes S_1 and S_2 to Smith generators (torsion ascending, then free).
RDiagram minimize_components(const RDiagram& rd);

/// Reads an R-diagram off a reduced presentation (elementary source, fbar = 0,
/// f_i injective) and minimizes its components. Throws ConsistencyError when
/// the result fails validation.
RDiagram to_rdiagram(const SeparatedPresentation& pres);

struct TraceStage {
  std::string name;
  SeparatedPresentation pres;
};

using Trace = std::vector<TraceStage>;

/// reduce_K, reduce_barf, reduce_monos, then to_rdiagram.
RDiagram reduce_sequential(const SeparatedPresentation& pres, Trace* trace = nullptr);

/// Single quotient by L = (q_1^{-1}(U + T2) + T_1, U + T1 + T2, q_2^{-1}(U + T1) + T_2)
/// with T_i = ker f_i, Ti = q_i(T_i) and U a complement of ker fbar.
RDiagram reduce_combined(const SeparatedPresentation& pres, Trace* trace = nullptr);

}  // namespace ppr
