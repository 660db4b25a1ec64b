#include "ppr/complex.hpp"

#include "ppr/error.hpp"

namespace ppr {

ChainComplexR ChainComplexR::from_differentials(Prime p, std::vector<Differential> differentials) {
  if (differentials.empty()) throw DimensionError("ChainComplexR: no differentials to read ranks from");
  std::vector<std::size_t> ranks;
  ranks.push_back(differentials.front().d1.cols());
  for (const auto& d : differentials) ranks.push_back(d.d1.rows());
  return ChainComplexR{p, std::move(ranks), std::move(differentials)};
}

Differential ChainComplexR::outgoing(std::size_t n) const {
  if (n >= ranks.size()) throw DimensionError("degree " + std::to_string(n) + " is out of range");
  if (n < differentials.size()) return differentials[n];
  return {IntMatrix(0, ranks[n]), IntMatrix(0, ranks[n])};
}

Differential ChainComplexR::incoming(std::size_t n) const {
  if (n >= ranks.size()) throw DimensionError("degree " + std::to_string(n) + " is out of range");
  if (n > 0) return differentials[n - 1];
  return {IntMatrix(ranks[0], 0), IntMatrix(ranks[0], 0)};
}

ComplexReport validate_complex(const ChainComplexR& c) {
  ComplexReport r;
  if (c.ranks.size() != c.differentials.size() + 1) {
    r.violations.push_back("expected " + std::to_string(c.differentials.size() + 1) + " ranks, got " +
                           std::to_string(c.ranks.size()));
    return r;
  }
  bool shapes_ok = true;
  for (std::size_t k = 0; k < c.differentials.size(); ++k) {
    const Differential& d = c.differentials[k];
    for (const IntMatrix* m : {&d.d1, &d.d2})
      if (m->rows() != c.ranks[k + 1] || m->cols() != c.ranks[k]) {
        r.violations.push_back("degree " + std::to_string(k) + ": " + (m == &d.d1 ? "d1" : "d2") + " is " +
                               std::to_string(m->rows()) + "x" + std::to_string(m->cols()) + ", expected " +
                               std::to_string(c.ranks[k + 1]) + "x" + std::to_string(c.ranks[k]));
        shapes_ok = false;
      }
  }
  if (!shapes_ok) return r;
  for (std::size_t k = 0; k < c.differentials.size(); ++k) {
    const Differential& d = c.differentials[k];
    for (std::size_t i = 0; i < d.d1.rows(); ++i)
      for (std::size_t j = 0; j < d.d1.cols(); ++j)
        if (reduce_mod(d.d1(i, j) - d.d2(i, j), c.p) != 0)
          r.violations.push_back("degree " + std::to_string(k) + " entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + "): d1 = " + d.d1(i, j).get_str() + " and d2 = " +
                                 d.d2(i, j).get_str() + " differ mod " + std::to_string(c.p.value()));
  }
  for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k) {
    const Differential& a = c.differentials[k];
    const Differential& b = c.differentials[k + 1];
    for (int side = 1; side <= 2; ++side) {
      const IntMatrix prod = side == 1 ? b.d1 * a.d1 : b.d2 * a.d2;
      for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
          if (prod(i, j) != 0) {
            r.violations.push_back("degrees " + std::to_string(k) + "->" + std::to_string(k + 2) + ": d" +
                                   std::to_string(side) + " composition has entry (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") = " + prod(i, j).get_str());
            i = prod.rows();
            break;
          }
    }
  }
  return r;
}

}  // namespace ppr
