#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lie.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace deltader {

/// The linear system for delta-derivations D: L -> V,
///
///   D([e_i, e_j]) + delta * e_j.D(e_i) - delta * e_i.D(e_j) = 0,   i < j,
///
/// as a pencil constant + delta * linear. Rows are ordered by pair (i, j)
/// lexicographically, then by module component m: row = pair * dim_v + m.
/// Column a * dim_v + m is the coefficient of v_m in D(e_a).
struct DerivationSystem {
  Representation module;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  Matrix constant;  // from D([e_i, e_j])
  Matrix linear;    // from delta * (e_j.D(e_i) - e_i.D(e_j))

  std::size_t rows() const { return constant.rows(); }
  std::size_t cols() const { return constant.cols(); }
  Poly entry(std::size_t r, std::size_t c) const { return Poly({constant(r, c), linear(r, c)}); }
  Matrix at(const Rational& delta) const { return constant + linear * delta; }
};

DerivationSystem assemble_system(const Representation& module);

/// A basis of Der_delta(L, V). Each basis map is a dim(L) x dim(V) matrix
/// whose row a holds the coordinates of D(e_a). The flattened basis is in
/// reduced row echelon form.
struct DerivationSpace {
  Rational delta;
  std::vector<Matrix> basis;
  /// Raw grading weight of each basis map, when solved with a grading.
  std::optional<Vector> weights;

  std::size_t dimension() const { return basis.size(); }
};

Vector flatten(const Matrix& map);
Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

struct DerivationCheck {
  bool ok = true;
  std::size_t i = 0;
  std::size_t j = 0;
  Vector residual;  // for the first failing pair
};

/// Evaluates the defining identity directly on every basis pair. Throws
/// ShapeMismatch when the map has the wrong shape.
DerivationCheck is_delta_derivation(const Matrix& map, const Representation& module, const Rational& delta);

/// Exact kernel of the system specialized at delta; every basis element is
/// re-checked with is_delta_derivation (VerificationFailure on mismatch).
DerivationSpace kernel_at(const DerivationSystem& system, const Rational& delta);

/// kernel_at(assemble_system(module), delta), or, given a grading element,
/// the same space assembled from independent per-weight blocks.
DerivationSpace solve(const Representation& module, const Rational& delta,
                      std::optional<std::size_t> grading_element = std::nullopt);

/// The inner derivations x -> x.v, v in V, as a space at delta = 1.
DerivationSpace inner_derivations(const Representation& module);

/// Connected components of a sparsity pattern: rows sharing a column are
/// linked. Columns touched by no row form singleton components.
struct Component {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};
std::vector<Component> connected_components(const std::vector<std::vector<std::size_t>>& row_support,
                                             std::size_t cols);

}  // namespace deltader
