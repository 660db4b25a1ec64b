#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ppr/fp.hpp"
#include "ppr/lattice.hpp"
#include "ppr/zmodule.hpp"

namespace ppr {

/// Element (r1, r2) of the p-pullback ring R = { (r1, r2) in Z^2 : r1 = r2 mod p }.
struct PPRElement {
  Prime p;
  Integer r1;
  Integer r2;

  /// Throws HypothesisError unless r1 = r2 (mod p).
  static PPRElement make(Prime p, Integer r1, Integer r2);
  /// Common residue r1 mod p.
  std::uint64_t bar() const { return reduce_mod(r1, p); }

  friend bool operator==(const PPRElement&, const PPRElement&) = default;
};

PPRElement operator+(const PPRElement& x, const PPRElement& y);
PPRElement operator*(const PPRElement& x, const PPRElement& y);

/// (r1, r2) . (x, y) = (r1 x, r2 y) on a pair of coordinate vectors.
std::pair<IntVector, IntVector> act(const PPRElement& r, const IntVector& x, const IntVector& y);

/// Checks on the basis {(1,1), (0,p)} of R that R / (P_1 + P_2) is Z/p.
bool quotient_ring_check(Prime p);

/// Triple (M_1, Mbar, M_2) with F_p-linear p_i : M_i -> Mbar = F_p^bar_dim.
struct PullbackDiagram {
  Prime p;
  ZModulePresentation m1;
  ZModulePresentation m2;
  std::size_t bar_dim = 0;
  FpMatrix p1;  // bar_dim x m1.generators()
  FpMatrix p2;  // bar_dim x m2.generators()

  /// Validates shapes and that each p_i kills the relations of M_i.
  static PullbackDiagram make(ZModulePresentation m1, ZModulePresentation m2, std::size_t bar_dim,
                              FpMatrix p1, FpMatrix p2);
  /// (Z^rank, F_p^rank, Z^rank; reduction, reduction)
  static PullbackDiagram free(Prime p, std::size_t rank);
};

/// Generator coordinates of the pullback { (m1, m2) : p1 m1 = p2 m2 } inside
/// Z^{n1+n2}; contains rel(M_1) (+) rel(M_2).
Lattice pullback_lattice(const PullbackDiagram& d);

struct SeparationReport {
  bool preseparated = false;
  bool separated = false;
  std::vector<std::string> witnesses;
};

SeparationReport is_separated(const PullbackDiagram& d);

/// R-submodule of T_1 (+) T_2 with T_1 = Z^a / N_1 and T_2 = Z^b / N_2,
/// given by a lattice L in Z^{a+b} that contains N_1 (+) N_2.
struct LatticeRModule {
  Prime p;
  std::size_t a = 0;
  std::size_t b = 0;
  Lattice lattice;
  Lattice relations;

  /// Throws HypothesisError when the lattice is not closed under R.
  static LatticeRModule make(Prime p, std::size_t a, std::size_t b, const IntMatrix& generators,
                             const Lattice& relations);
  /// Smallest R-submodule containing the generators and the relations.
  static LatticeRModule closure(Prime p, std::size_t a, std::size_t b, const IntMatrix& generators,
                                const Lattice& relations);
};

/// Closure under (0,p); (1,1) acts trivially and (p,0) = p(1,1) - (0,p).
bool is_r_closed(Prime p, std::size_t a, const Lattice& l);
IntVector times_second_generator(Prime p, std::size_t a, const IntVector& v);

LatticeRModule pullback_group(const PullbackDiagram& d);

/// Separated diagram of an R-module: S_1 = S/P_2S, S_2 = S/P_1S,
/// Sbar = S/(P_1S + P_2S). Generator j of S_1 and S_2 is lattice basis column j.
struct Separation {
  PullbackDiagram diagram;
  IntMatrix lattice_basis;
};

Separation separate(const LatticeRModule& s);

/// R-linear map given by the images (target ambient coordinates) of the
/// source lattice basis.
struct RModuleMap {
  LatticeRModule source;
  LatticeRModule target;
  IntMatrix images;

  /// Map induced by block matrices g1 : Z^a -> Z^a', g2 : Z^b -> Z^b'.
  static RModuleMap from_blocks(const LatticeRModule& source, const LatticeRModule& target,
                                const IntMatrix& g1, const IntMatrix& g2);
};

/// Images in the target, compatible with relations and with the R-action.
bool is_r_linear(const RModuleMap& g);

struct DiagramMorphism {
  PullbackDiagram source;
  PullbackDiagram target;
  IntMatrix f1;
  IntMatrix f2;
  FpMatrix fbar;
};

/// Empty when f_i are well-defined and both squares commute.
std::vector<std::string> morphism_defects(const DiagramMorphism& m);

DiagramMorphism separate_morphism(const RModuleMap& g, const Separation& src, const Separation& tgt);

/// Injectivity through mu(m1, m2) = p1(m1) - p2(m2) on ker f_1 (+) ker f_2.
bool is_mono(const DiagramMorphism& m);
/// Injectivity computed directly on the pullback groups.
bool is_mono_direct(const DiagramMorphism& m);

struct MonoConditions {
  bool kernels_avoid_structure_kernels = false;  // ker f_i meets ker p_i trivially, i = 1, 2
  bool kernel_images_disjoint = false;           // p_1(ker f_1) meets p_2(ker f_2) trivially
  bool holds() const { return kernels_avoid_structure_kernels && kernel_images_disjoint; }
};

MonoConditions mono_conditions(const DiagramMorphism& m);

struct EpiReport {
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;
  bool cond4 = false;
  bool direct = false;
  bool any_condition() const { return cond1 || cond2 || cond3 || cond4; }
};

EpiReport epi_conditions(const DiagramMorphism& m);

}  // namespace ppr
