#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "ppr/complex.hpp"
#include "ppr/reduction.hpp"

namespace ppr {

using Rng = std::mt19937_64;

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);

/// Random unimodular n x n matrix (product of elementary operations).
IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 12);

/// Random R-submodule of Z^a (+) Z^b: closure of a few random generators.
LatticeRModule random_r_module(Rng& rng, Prime p, std::size_t a, std::size_t b, long bound = 3);

struct PresentationShape {
  std::size_t max_component = 5;  // bound on a + b for both K and S ambients
  long bound = 3;                 // entry bound
};

/// Separated presentation obtained by separating a random R-linear block map
/// (or the inclusion of a random submodule)
/// g : K -> S between random R-submodules of Z^c (+) Z^d and Z^a (+) Z^b.
SeparatedPresentation random_separated_presentation(Rng& rng, Prime p, const PresentationShape& shape = {});

struct ComplexShape {
  std::size_t max_rank = 6;
  std::size_t degrees = 2;  // number of modules
  long bound = 3;
};

/// Random complex. The last differential is drawn first (d2 = d1 + pE, often
/// of low rank); each earlier differential has columns that are random integer
/// combinations of a basis of the kernel lattice of the next one.
ChainComplexR random_complex(Rng& rng, Prime p, const ComplexShape& shape = {});

}  // namespace ppr
