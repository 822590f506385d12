#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace deltader {

enum class Validation { Full, Skip };

/// One structure constant: [e_i, e_j] has coefficient `value` on e_k.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational value;
};

struct Term {
  std::size_t index = 0;
  Rational coeff;
};

class JacobiViolation : public Error {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, Vector residual);
  std::size_t i, j, k;
  Vector residual;
};

class NotARepresentation : public Error {
 public:
  NotARepresentation(std::size_t i, std::size_t j);
  std::size_t i, j;
};

/// Finite-dimensional Lie algebra over Q given by structure constants on a
/// fixed basis. Only brackets with i < j are stored.
class LieAlgebra {
 public:
  /// Entries with i > j are stored as [e_j, e_i] with negated value; entries
  /// with i == j must be zero. Duplicate entries accumulate.
  static LieAlgebra from_structure_constants(std::size_t dim, const std::vector<BracketEntry>& entries,
                                             std::vector<std::string> labels = {},
                                             Validation validation = Validation::Full);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Half-open index ranges of the simple (or at least indecomposable as
  /// built) summands; a single range unless built by a direct sum.
  const std::vector<std::pair<std::size_t, std::size_t>>& summands() const { return summands_; }

  /// Sparse [e_i, e_j] for any i, j.
  std::vector<Term> bracket_terms(std::size_t i, std::size_t j) const;
  /// Dense coordinates of [e_i, e_j].
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary coordinate vectors.
  Vector bracket(const Vector& x, const Vector& y) const;

  /// All stored constants (i < j), sorted.
  std::vector<BracketEntry> entries() const;

  /// Exhaustive Jacobi identity check; throws JacobiViolation.
  void check_jacobi() const;

  /// Dimension of the derived algebra [L, L].
  std::size_t derived_dim() const;

  /// Copy with the given summand ranges; they must partition 0..dim and
  /// brackets across different ranges must vanish.
  LieAlgebra with_summands(std::vector<std::pair<std::size_t, std::size_t>> ranges) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

 private:
  friend LieAlgebra direct_sum_algebras(const std::vector<LieAlgebra>& parts);
  std::size_t pair_slot(std::size_t i, std::size_t j) const { return i * dim_ + j; }

  std::size_t dim_ = 0;
  std::vector<std::vector<Term>> upper_;  // dim*dim slots, filled for i < j
  std::vector<std::string> labels_;
  std::vector<std::pair<std::size_t, std::size_t>> summands_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// A module over a Lie algebra, one action matrix per algebra basis element.
class Representation {
 public:
  Representation(AlgebraPtr algebra, std::size_t dim_v, std::vector<Matrix> action,
                 std::optional<std::vector<int>> weight_labels = std::nullopt,
                 Validation validation = Validation::Full);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim_v() const { return dim_v_; }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& action(std::size_t i) const { return action_.at(i); }
  const std::optional<std::vector<int>>& weight_labels() const { return weight_labels_; }

  /// rho([e_i, e_j]) == [rho(e_i), rho(e_j)] for all i < j; throws NotARepresentation.
  void check_homomorphism() const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_v_;
  std::vector<Matrix> action_;
  std::optional<std::vector<int>> weight_labels_;
};

/// Basis (e-, h, e+) with [h,e-] = -2e-, [h,e+] = 2e+, [e+,e-] = h.
AlgebraPtr sl2();

/// sl(n) on the basis E_ij (i != j, lexicographic) followed by
/// H_k = E_kk - E_{k+1,k+1}, together with its natural module.
std::pair<AlgebraPtr, Representation> sl_n(int n);

/// Block concatenation; summand ranges are flattened so nested sums compose.
LieAlgebra direct_sum_algebras(const std::vector<LieAlgebra>& parts);
AlgebraPtr direct_sum_algebras(const std::vector<AlgebraPtr>& parts);

/// V(n): e- v_i = (i+1) v_{i+1}, h v_i = (n-2i) v_i, e+ v_i = (n-i+1) v_{i-1}.
Representation sl2_module(int n);

Representation adjoint_module(const AlgebraPtr& algebra);
Representation trivial_module(const AlgebraPtr& algebra, std::size_t dim);

/// Block-diagonal sum; throws AlgebraMismatch if the parts disagree.
Representation direct_sum_modules(const std::vector<Representation>& parts);

/// V1 (x) V2 over L1 (+) L2; basis index of v_a (x) w_b is a * dim(V2) + b.
Representation tensor_module(const Representation& first, const Representation& second);

/// Basis (reduced echelon) of the joint kernel of all action matrices.
std::vector<Vector> invariants(const Representation& module);

struct WeightBlock {
  Rational weight;
  std::vector<std::size_t> algebra_indices;
  std::vector<std::size_t> module_indices;
};

struct Grading {
  std::size_t element = 0;
  Vector algebra_weights;  // ad-eigenvalue of each algebra basis element
  Vector module_weights;   // rho-eigenvalue of each module basis vector
  std::vector<WeightBlock> blocks;  // sorted by weight
};

/// Eigenvalue grading by a designated basis element whose ad- and
/// rho-matrices are already diagonal; throws NotDiagonal otherwise. Weights
/// are raw eigenvalues (for sl(2) and h: e- -> -2, h -> 0, e+ -> 2).
Grading weight_decomposition(const Representation& module, std::size_t element);

}  // namespace deltader
