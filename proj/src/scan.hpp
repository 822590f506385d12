#pragma once

#include <cstddef>
#include <vector>

#include "derivation.hpp"
#include "poly.hpp"

namespace deltader {

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Diagonalizes a matrix over Q[delta] by unimodular row and column
/// operations (integer-preserving pseudo-division, content removal), choosing
/// pivots of lowest degree, ties by lowest column. Returns the normalized
/// diagonal entries; their product is the gcd of the maximal minors, so the
/// rank at delta0 equals the number of entries not vanishing at delta0.
std::vector<Poly> diagonalize(PolyMatrix m);

struct Finding {
  Rational delta;
  std::size_t dimension = 0;
};

struct ScanReport {
  std::size_t generic_rank = 0;
  /// Kernel dimension at all but finitely many delta (nonzero only for
  /// degenerate inputs such as one-dimensional algebras).
  std::size_t generic_kernel_dimension = 0;
  /// Rational delta where the kernel exceeds the generic dimension, sorted by
  /// (numerator, denominator).
  std::vector<Finding> findings;
  /// Normalized squarefree pivot factors of degree >= 2 without rational roots.
  std::vector<Poly> nonrational_factors;
  /// Closed form (dim L - dim [L,L]) * dim V at delta = 0.
  std::size_t delta_zero_dimension = 0;
  bool include_zero = false;
};

ScanReport scan(const Representation& module, bool include_zero = false);

}  // namespace deltader
