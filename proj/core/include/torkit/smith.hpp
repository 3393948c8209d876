#pragma once

#include <vector>

#include "torkit/matrix.hpp"
#include "torkit/scalars.hpp"

namespace torkit {

using IntegerMatrix = std::vector<std::vector<Integer>>;

struct SmithDecomposition {
  std::vector<Integer> divisors;  // d_1 | d_2 | …, nonnegative, length min(rows, cols)
  IntegerMatrix left;             // unimodular, rows×rows
  IntegerMatrix right;            // unimodular, cols×cols
};

// Diagonalizes an integral matrix as left·m·right = diag(divisors).
// Throws std::invalid_argument when an entry is not a (real) integer.
// The transforms are re-multiplied against the input before returning;
// any mismatch throws std::logic_error rather than returning bad certificates.
SmithDecomposition smith_normal_form(const ExactMatrix& m);

}  // namespace torkit
