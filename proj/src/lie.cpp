#include "lie.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace deltader {

namespace {

std::string vector_string(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
  os << ")";
  return os.str();
}

bool all_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace

JacobiViolation::JacobiViolation(std::size_t i_, std::size_t j_, std::size_t k_, Vector residual_)
    : Error(ErrorCode::JacobiViolation, "Jacobi identity fails on basis triple (" + std::to_string(i_) + ", " +
                                            std::to_string(j_) + ", " + std::to_string(k_) +
                                            "), residual " + vector_string(residual_)),
      i(i_), j(j_), k(k_), residual(std::move(residual_)) {}

NotARepresentation::NotARepresentation(std::size_t i_, std::size_t j_)
    : Error(ErrorCode::NotARepresentation, "action is not a homomorphism on basis pair (" + std::to_string(i_) +
                                               ", " + std::to_string(j_) + ")"),
      i(i_), j(j_) {}

LieAlgebra LieAlgebra::from_structure_constants(std::size_t dim, const std::vector<BracketEntry>& entries,
                                                std::vector<std::string> labels, Validation validation) {
  if (dim == 0) throw InvalidArgument("Lie algebra dimension must be positive");
  if (!labels.empty() && labels.size() != dim) throw InvalidArgument("label count does not match dimension");
  if (labels.empty())
    for (std::size_t k = 0; k < dim; ++k) labels.push_back("x" + std::to_string(k));

  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>> acc;
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim)
      throw IndexOutOfRange("structure constant index out of range: (" + std::to_string(e.i) + ", " +
                            std::to_string(e.j) + ", " + std::to_string(e.k) + ") for dim " + std::to_string(dim));
    if (e.i == e.j) {
      if (!e.value.is_zero()) throw InvalidArgument("nonzero [x, x] for basis element " + std::to_string(e.i));
      continue;
    }
    if (e.i < e.j)
      acc[{e.i, e.j}][e.k] += e.value;
    else
      acc[{e.j, e.i}][e.k] -= e.value;
  }

  LieAlgebra out;
  out.dim_ = dim;
  out.labels_ = std::move(labels);
  out.upper_.resize(dim * dim);
  out.summands_ = {{0, dim}};
  for (const auto& [ij, terms] : acc)
    for (const auto& [k, c] : terms)
      if (!c.is_zero()) out.upper_[out.pair_slot(ij.first, ij.second)].push_back({k, c});
  if (validation == Validation::Full) out.check_jacobi();
  return out;
}

std::vector<Term> LieAlgebra::bracket_terms(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw IndexOutOfRange("bracket index out of range");
  if (i == j) return {};
  if (i < j) return upper_[pair_slot(i, j)];
  auto t = upper_[pair_slot(j, i)];
  for (auto& term : t) term.coeff = -term.coeff;
  return t;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (const auto& t : bracket_terms(i, j)) v[t.index] += t.coeff;
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw ShapeMismatch("bracket operand has wrong length");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      Rational s = x[i] * y[j];
      for (const auto& t : bracket_terms(i, j)) out[t.index] += s * t.coeff;
    }
  }
  return out;
}

std::vector<BracketEntry> LieAlgebra::entries() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (const auto& t : upper_[pair_slot(i, j)]) out.push_back({i, j, t.index, t.coeff});
  return out;
}

void LieAlgebra::check_jacobi() const {
  // [[a,b],c] with a,b,c basis elements, as a dense vector.
  auto nested = [this](std::size_t a, std::size_t b, std::size_t c) {
    Vector out(dim_);
    for (const auto& t : bracket_terms(a, b))
      for (const auto& u : bracket_terms(t.index, c)) out[u.index] += t.coeff * u.coeff;
    return out;
  };
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        Vector r = nested(i, j, k);
        Vector r2 = nested(j, k, i);
        Vector r3 = nested(k, i, j);
        for (std::size_t m = 0; m < dim_; ++m) r[m] += r2[m] + r3[m];
        if (!all_zero(r)) throw JacobiViolation(i, j, k, std::move(r));
      }
}

std::size_t LieAlgebra::derived_dim() const {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!upper_[pair_slot(i, j)].empty()) rows.push_back(bracket_basis(i, j));
  return rref(std::move(rows)).size();
}

LieAlgebra LieAlgebra::with_summands(std::vector<std::pair<std::size_t, std::size_t>> ranges) const {
  std::vector<std::size_t> owner(dim_, ranges.size());
  std::size_t expected = 0;
  for (std::size_t s = 0; s < ranges.size(); ++s) {
    const auto [b, e] = ranges[s];
    if (b != expected || e <= b || e > dim_) throw InvalidArgument("summand ranges must partition the basis in order");
    for (std::size_t k = b; k < e; ++k) owner[k] = s;
    expected = e;
  }
  if (expected != dim_) throw InvalidArgument("summand ranges must cover the whole basis");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (owner[i] == owner[j]) continue;
      if (!upper_[pair_slot(i, j)].empty())
        throw InvalidArgument("bracket between different summands is nonzero: (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (const auto& t : upper_[pair_slot(i, j)])
        if (owner[t.index] != owner[i]) throw InvalidArgument("bracket leaves its summand");
  LieAlgebra out = *this;
  out.summands_ = std::move(ranges);
  return out;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim_ != b.dim_ || a.summands_ != b.summands_) return false;
  for (std::size_t s = 0; s < a.upper_.size(); ++s) {
    const auto& x = a.upper_[s];
    const auto& y = b.upper_[s];
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (x[t].index != y[t].index || x[t].coeff != y[t].coeff) return false;
  }
  return true;
}

Representation::Representation(AlgebraPtr algebra, std::size_t dim_v, std::vector<Matrix> action,
                               std::optional<std::vector<int>> weight_labels, Validation validation)
    : algebra_(std::move(algebra)), dim_v_(dim_v), action_(std::move(action)), weight_labels_(std::move(weight_labels)) {
  if (!algebra_) throw InvalidArgument("representation without an algebra");
  if (action_.size() != algebra_->dim())
    throw ShapeMismatch("expected " + std::to_string(algebra_->dim()) + " action matrices, got " +
                        std::to_string(action_.size()));
  for (const auto& m : action_)
    if (m.rows() != dim_v_ || m.cols() != dim_v_) throw ShapeMismatch("action matrix has wrong shape");
  if (weight_labels_ && weight_labels_->size() != dim_v_) throw ShapeMismatch("weight label count mismatch");
  if (validation == Validation::Full) check_homomorphism();
}

void Representation::check_homomorphism() const {
  const std::size_t n = algebra_->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs(dim_v_, dim_v_);
      for (const auto& t : algebra_->bracket_terms(i, j)) lhs += action_[t.index] * t.coeff;
      Matrix rhs = action_[i] * action_[j] - action_[j] * action_[i];
      if (!(lhs == rhs)) throw NotARepresentation(i, j);
    }
}

AlgebraPtr sl2() {
  static const AlgebraPtr instance = std::make_shared<const LieAlgebra>(LieAlgebra::from_structure_constants(
      3,
      {
          {1, 0, 0, Rational(-2)},  // [h, e-] = -2 e-
          {1, 2, 2, Rational(2)},   // [h, e+] = 2 e+
          {2, 0, 1, Rational(1)},   // [e+, e-] = h
      },
      {"e-", "h", "e+"}));
  return instance;
}

std::pair<AlgebraPtr, Representation> sl_n(int n) {
  if (n < 2) throw InvalidArgument("sl(n) requires n >= 2");
  const auto N = static_cast<std::size_t>(n);
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      Matrix m(N, N);
      m(i, j) = 1;
      basis.push_back(std::move(m));
      labels.push_back("E" + std::to_string(i + 1) + "," + std::to_string(j + 1));
    }
  for (std::size_t k = 0; k + 1 < N; ++k) {
    Matrix m(N, N);
    m(k, k) = 1;
    m(k + 1, k + 1) = -1;
    basis.push_back(std::move(m));
    labels.push_back("H" + std::to_string(k + 1));
  }
  const std::size_t off_diag = N * (N - 1);
  // Coordinates of a traceless matrix in the basis above.
  auto coords = [&](const Matrix& m) {
    Vector c(basis.size());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        if (i == j) continue;
        c[idx++] = m(i, j);
      }
    Rational running;
    for (std::size_t k = 0; k + 1 < N; ++k) {
      running += m(k, k);
      c[off_diag + k] = running;
    }
    return c;
  };
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      Matrix comm = basis[a] * basis[b] - basis[b] * basis[a];
      Vector c = coords(comm);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) entries.push_back({a, b, k, c[k]});
    }
  auto algebra = std::make_shared<const LieAlgebra>(LieAlgebra::from_structure_constants(basis.size(), entries, labels));
  Representation natural(algebra, N, basis);
  return {algebra, std::move(natural)};
}

LieAlgebra direct_sum_algebras(const std::vector<LieAlgebra>& parts) {
  if (parts.empty()) throw InvalidArgument("direct sum of zero algebras");
  if (parts.size() == 1) return parts.front();
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  LieAlgebra out;
  out.dim_ = total;
  out.upper_.resize(total * total);
  std::size_t offset = 0;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    const auto& p = parts[s];
    for (const auto& e : p.entries()) out.upper_[out.pair_slot(e.i + offset, e.j + offset)].push_back({e.k + offset, e.value});
    for (const auto& lbl : p.labels()) out.labels_.push_back(lbl + "_" + std::to_string(s + 1));
    for (const auto& [b, e] : p.summands()) out.summands_.emplace_back(b + offset, e + offset);
    offset += p.dim();
  }
  return out;
}

AlgebraPtr direct_sum_algebras(const std::vector<AlgebraPtr>& parts) {
  if (parts.size() == 1) return parts.front();
  std::vector<LieAlgebra> values;
  for (const auto& p : parts) values.push_back(*p);
  return std::make_shared<const LieAlgebra>(direct_sum_algebras(values));
}

Representation sl2_module(int n) {
  if (n < 0) throw InvalidArgument("V(n) requires n >= 0");
  const auto N = static_cast<std::size_t>(n) + 1;
  Matrix em(N, N), h(N, N), ep(N, N);
  for (std::size_t i = 0; i < N; ++i) {
    const long ii = static_cast<long>(i);
    if (i + 1 < N) em(i + 1, i) = Rational(ii + 1);
    h(i, i) = Rational(n - 2 * ii);
    if (i >= 1) ep(i - 1, i) = Rational(n - ii + 1);
  }
  std::vector<int> weights(N);
  for (std::size_t i = 0; i < N; ++i) weights[i] = static_cast<int>(i);
  return Representation(sl2(), N, {em, h, ep}, weights);
}

Representation adjoint_module(const AlgebraPtr& algebra) {
  const std::size_t n = algebra->dim();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix ad(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : algebra->bracket_terms(i, j)) ad(t.index, j) += t.coeff;
    action.push_back(std::move(ad));
  }
  return Representation(algebra, n, std::move(action));
}

Representation trivial_module(const AlgebraPtr& algebra, std::size_t dim) {
  std::vector<Matrix> action(algebra->dim(), Matrix(dim, dim));
  return Representation(algebra, dim, std::move(action), std::vector<int>(dim, 0), Validation::Skip);
}

Representation direct_sum_modules(const std::vector<Representation>& parts) {
  if (parts.empty()) throw InvalidArgument("direct sum of zero modules");
  if (parts.size() == 1) return parts.front();
  const auto& algebra = parts.front().algebra();
  std::size_t total = 0;
  bool weighted = true;
  for (const auto& p : parts) {
    if (p.algebra() != algebra && !(*p.algebra() == *algebra))
      throw AlgebraMismatch("direct sum of modules over different algebras");
    total += p.dim_v();
    weighted = weighted && p.weight_labels().has_value();
  }
  std::vector<Matrix> action(algebra->dim(), Matrix(total, total));
  std::vector<int> weights;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t x = 0; x < algebra->dim(); ++x)
      for (std::size_t r = 0; r < p.dim_v(); ++r)
        for (std::size_t c = 0; c < p.dim_v(); ++c) action[x](offset + r, offset + c) = p.action(x)(r, c);
    if (weighted) weights.insert(weights.end(), p.weight_labels()->begin(), p.weight_labels()->end());
    offset += p.dim_v();
  }
  std::optional<std::vector<int>> labels;
  if (weighted) labels = std::move(weights);
  return Representation(algebra, total, std::move(action), std::move(labels), Validation::Skip);
}

Representation tensor_module(const Representation& first, const Representation& second) {
  auto algebra = direct_sum_algebras(std::vector<AlgebraPtr>{first.algebra(), second.algebra()});
  const Matrix id1 = Matrix::identity(first.dim_v());
  const Matrix id2 = Matrix::identity(second.dim_v());
  std::vector<Matrix> action;
  for (const auto& m : first.action()) action.push_back(kron(m, id2));
  for (const auto& m : second.action()) action.push_back(kron(id1, m));
  return Representation(algebra, first.dim_v() * second.dim_v(), std::move(action));
}

std::vector<Vector> invariants(const Representation& module) {
  const std::size_t n = module.algebra()->dim(), d = module.dim_v();
  if (d == 0) return {};
  Matrix stacked(n * d, d);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) stacked(x * d + r, c) = module.action(x)(r, c);
  return nullspace(stacked);
}

Grading weight_decomposition(const Representation& module, std::size_t element) {
  const auto& algebra = *module.algebra();
  if (element >= algebra.dim()) throw IndexOutOfRange("grading element index out of range");
  Grading g;
  g.element = element;
  g.algebra_weights.resize(algebra.dim());
  for (std::size_t j = 0; j < algebra.dim(); ++j) {
    for (const auto& t : algebra.bracket_terms(element, j)) {
      if (t.index != j)
        throw NotDiagonal("ad(" + algebra.labels()[element] + ") is not diagonal on " + algebra.labels()[j]);
      g.algebra_weights[j] = t.coeff;
    }
  }
  const Matrix& rho = module.action(element);
  g.module_weights.resize(module.dim_v());
  for (std::size_t r = 0; r < module.dim_v(); ++r)
    for (std::size_t c = 0; c < module.dim_v(); ++c) {
      if (r != c && !rho(r, c).is_zero())
        throw NotDiagonal("module action of " + algebra.labels()[element] + " is not diagonal");
      if (r == c) g.module_weights[r] = rho(r, c);
    }
  std::map<Rational, WeightBlock> blocks;
  for (std::size_t j = 0; j < g.algebra_weights.size(); ++j) blocks[g.algebra_weights[j]].algebra_indices.push_back(j);
  for (std::size_t m = 0; m < g.module_weights.size(); ++m) blocks[g.module_weights[m]].module_indices.push_back(m);
  for (auto& [w, b] : blocks) {
    b.weight = w;
    g.blocks.push_back(std::move(b));
  }
  return g;
}

}  // namespace deltader
