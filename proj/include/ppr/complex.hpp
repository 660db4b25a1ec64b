#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ppr/fp.hpp"
#include "ppr/int_matrix.hpp"

namespace ppr {

/// Differential of free R-modules R^m -> R^n given by its two integer
/// components; they agree mod p.
struct Differential {
  IntMatrix d1;
  IntMatrix d2;
};

/// Cochain complex C^0 -> C^1 -> ... with C^k = R^{ranks[k]} and
/// differentials[k] : C^k -> C^{k+1}.
struct ChainComplexR {
  Prime p;
  std::vector<std::size_t> ranks;
  std::vector<Differential> differentials;

  /// Ranks read off the differentials (at least one differential required).
  static ChainComplexR from_differentials(Prime p, std::vector<Differential> differentials);

  std::size_t degrees() const { return ranks.size(); }
  /// Differential leaving degree n, zero when n is the last degree.
  Differential outgoing(std::size_t n) const;
  /// Differential arriving in degree n, zero when n = 0.
  Differential incoming(std::size_t n) const;
};

struct ComplexReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Shapes, d1 = d2 (mod p) entrywise, and consecutive compositions vanishing.
ComplexReport validate_complex(const ChainComplexR& c);

}  // namespace ppr
