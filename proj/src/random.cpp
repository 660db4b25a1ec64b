#include "ppr/random.hpp"

namespace ppr {
namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Random integer matrix whose rank is at most `rank`.
IntMatrix random_low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t rank, long bound) {
  return random_int_matrix(rng, rows, rank, bound) * random_int_matrix(rng, rank, cols, bound);
}

IntMatrix random_relations(Rng& rng, Prime p, std::size_t n) {
  // Mostly multiples of p and small torsion, so that components stay interesting.
  const std::size_t k = uniform_size(rng, 0, n);
  IntMatrix m(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t i = uniform_size(rng, 0, n - 1);
    const long choice = uniform(rng, 0, 3);
    m(i, j) = choice == 0 ? Integer(uniform(rng, 2, 6)) : p.as_integer() * (choice == 3 ? p.as_integer() : 1);
    if (n > 1 && uniform(rng, 0, 2) == 0) m((i + 1) % n, j) = uniform(rng, -2, 2);
  }
  return m;
}

}  // namespace

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 0) return u;
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = uniform_size(rng, 0, n - 1);
    const std::size_t b = uniform_size(rng, 0, n - 1);
    if (a == b) {
      if (uniform(rng, 0, 1)) u.negate_column(a);
      continue;
    }
    if (uniform(rng, 0, 4) == 0)
      u.swap_columns(a, b);
    else
      u.add_column_multiple(a, b, uniform(rng, -2, 2));
  }
  return u;
}

LatticeRModule random_r_module(Rng& rng, Prime p, std::size_t a, std::size_t b, long bound) {
  const std::size_t k = uniform_size(rng, 0, a + b);
  return LatticeRModule::closure(p, a, b, random_int_matrix(rng, a + b, k, bound), Lattice::zero(a + b));
}

SeparatedPresentation random_separated_presentation(Rng& rng, Prime p, const PresentationShape& shape) {
  const std::size_t n_s = uniform_size(rng, 1, shape.max_component);
  const std::size_t a = uniform_size(rng, 0, n_s), b = n_s - a;
  const Lattice rel = Lattice::direct_sum(a ? Lattice::span(a, random_relations(rng, p, a)) : Lattice::zero(0),
                                          b ? Lattice::span(b, random_relations(rng, p, b)) : Lattice::zero(0));

  if (uniform(rng, 0, 1) == 0) {
    // Submodule K of a random S, presented by the inclusion.
    const LatticeRModule s = LatticeRModule::closure(p, a, b, random_int_matrix(rng, n_s, uniform_size(rng, 1, n_s), shape.bound), rel);
    IntMatrix coeff = random_int_matrix(rng, s.lattice.rank(), uniform_size(rng, 0, n_s), shape.bound);
    if (uniform(rng, 0, 1) == 0) coeff = coeff.scaled(p.as_integer());
    const LatticeRModule k = LatticeRModule::closure(p, a, b, s.lattice.basis() * coeff, Lattice::zero(n_s));
    const RModuleMap g = RModuleMap::from_blocks(k, s, IntMatrix::identity(a), IntMatrix::identity(b));
    return SeparatedPresentation::make(separate_morphism(g, separate(k), separate(s)));
  }

  const std::size_t n_k = uniform_size(rng, 0, shape.max_component);
  const std::size_t c = uniform_size(rng, 0, n_k), d = n_k - c;
  const LatticeRModule k = random_r_module(rng, p, c, d, shape.bound);
  IntMatrix g1 = random_int_matrix(rng, a, c, shape.bound);
  IntMatrix g2 = random_int_matrix(rng, b, d, shape.bound);
  // Occasionally force f_bar or a component to degenerate.
  switch (uniform(rng, 0, 6)) {
    case 0: g1 = g1.scaled(p.as_integer()); break;
    case 1: g2 = g2.scaled(p.as_integer()); break;
    case 2: g1 = IntMatrix(a, c); break;
    case 3:
      g1 = g1.scaled(p.as_integer());
      g2 = g2.scaled(p.as_integer());
      break;
    default: break;
  }
  const IntMatrix image = IntMatrix::block_diagonal(g1, g2) * k.lattice.basis();
  const IntMatrix extra = random_int_matrix(rng, a + b, uniform_size(rng, 0, 1), shape.bound);
  const LatticeRModule s = LatticeRModule::closure(p, a, b, IntMatrix::hstack(image, extra), rel);
  const RModuleMap g = RModuleMap::from_blocks(k, s, g1, g2);
  return SeparatedPresentation::make(separate_morphism(g, separate(k), separate(s)));
}

ChainComplexR random_complex(Rng& rng, Prime p, const ComplexShape& shape) {
  const std::size_t degrees = std::max<std::size_t>(shape.degrees, 2);
  std::vector<std::size_t> ranks(degrees);
  for (auto& r : ranks) r = uniform_size(rng, 1, shape.max_rank);

  std::vector<Differential> diffs(degrees - 1);
  {
    const std::size_t rows = ranks[degrees - 1], cols = ranks[degrees - 2];
    const std::size_t rank = uniform_size(rng, 0, std::min(rows, cols));
    IntMatrix d1 = random_low_rank(rng, rows, cols, rank, shape.bound);
    IntMatrix e = uniform(rng, 0, 2) == 0 ? IntMatrix(rows, cols)
                                           : random_low_rank(rng, rows, cols, uniform_size(rng, 0, std::min(rows, cols)), 1);
    diffs.back() = {d1, d1 + e.scaled(p.as_integer())};
  }
  for (std::size_t k = degrees - 2; k-- > 0;) {
    const Differential& next = diffs[k + 1];
    const std::size_t m = ranks[k + 1];
    const Lattice pairs = preimage_lattice(IntMatrix::hstack(IntMatrix::identity(m), IntMatrix::identity(m).scaled(-1)),
                                           Lattice::scaled_full(m, p.as_integer()));
    const Lattice cycles = lattice_intersection(pairs, kernel_basis(IntMatrix::block_diagonal(next.d1, next.d2)));
    const IntMatrix coeff = random_int_matrix(rng, cycles.rank(), ranks[k], shape.bound);
    const IntMatrix cols = cycles.basis() * coeff;
    diffs[k] = {cols.row_range(0, m), cols.row_range(m, 2 * m)};
  }
  return ChainComplexR{p, std::move(ranks), std::move(diffs)};
}

}  // namespace ppr
