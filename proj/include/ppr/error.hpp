#pragma once

#include <stdexcept>
#include <string>

namespace ppr {

/// Operand shapes or ambient ranks do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates a mathematical precondition (non-prime p, map not
/// well-defined, diagram not separated, ...).
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A check that must hold by construction failed. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ppr
