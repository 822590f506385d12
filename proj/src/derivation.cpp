#include "derivation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace deltader {

DerivationSystem assemble_system(const Representation& module) {
  const auto& algebra = *module.algebra();
  const std::size_t n = algebra.dim(), dv = module.dim_v();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  Matrix a(pairs.size() * dv, n * dv), b(pairs.size() * dv, n * dv);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    const Matrix& rho_i = module.action(i);
    const Matrix& rho_j = module.action(j);
    for (std::size_t m = 0; m < dv; ++m) {
      const std::size_t row = p * dv + m;
      for (const auto& t : algebra.bracket_terms(i, j)) a(row, t.index * dv + m) += t.coeff;
      for (std::size_t mm = 0; mm < dv; ++mm) {
        if (!rho_j(m, mm).is_zero()) b(row, i * dv + mm) += rho_j(m, mm);
        if (!rho_i(m, mm).is_zero()) b(row, j * dv + mm) -= rho_i(m, mm);
      }
    }
  }
  return DerivationSystem{module, std::move(pairs), std::move(a), std::move(b)};
}

Vector flatten(const Matrix& map) { return map.data(); }

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw ShapeMismatch("cannot reshape vector");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

DerivationCheck is_delta_derivation(const Matrix& map, const Representation& module, const Rational& delta) {
  const auto& algebra = *module.algebra();
  const std::size_t n = algebra.dim(), dv = module.dim_v();
  if (map.rows() != n || map.cols() != dv)
    throw ShapeMismatch("map must be " + std::to_string(n) + " x " + std::to_string(dv));
  auto image = [&](std::size_t a) {
    Vector v(dv);
    for (std::size_t m = 0; m < dv; ++m) v[m] = map(a, m);
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // D([x,y]) + delta y.D(x) - delta x.D(y)
      Vector residual(dv);
      for (const auto& t : algebra.bracket_terms(i, j))
        for (std::size_t m = 0; m < dv; ++m) residual[m] += t.coeff * map(t.index, m);
      Vector yx = module.action(j).apply(image(i));
      Vector xy = module.action(i).apply(image(j));
      bool zero = true;
      for (std::size_t m = 0; m < dv; ++m) {
        residual[m] += delta * (yx[m] - xy[m]);
        zero = zero && residual[m].is_zero();
      }
      if (!zero) return {false, i, j, std::move(residual)};
    }
  return {};
}

std::vector<Component> connected_components(const std::vector<std::vector<std::size_t>>& row_support,
                                            std::size_t cols) {
  std::vector<std::size_t> parent(cols);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& support : row_support)
    for (std::size_t k = 1; k < support.size(); ++k) {
      auto a = find(support[0]), b = find(support[k]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, Component> by_root;
  for (std::size_t c = 0; c < cols; ++c) by_root[find(c)].cols.push_back(c);
  for (std::size_t r = 0; r < row_support.size(); ++r)
    if (!row_support[r].empty()) by_root[find(row_support[r][0])].rows.push_back(r);
  std::vector<Component> out;
  for (auto& [root, comp] : by_root) out.push_back(std::move(comp));
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> support_of(const Matrix& m) {
  std::vector<std::vector<std::size_t>> s(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) s[r].push_back(c);
  return s;
}

// Nullspace of the given rows/columns of m, embedded in the full column space.
std::vector<Vector> block_nullspace(const Matrix& m, const std::vector<std::size_t>& rows,
                                    const std::vector<std::size_t>& cols) {
  Matrix sub(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = m(rows[r], cols[c]);
  std::vector<Vector> out;
  for (const auto& v : nullspace(sub)) {
    Vector full(m.cols());
    for (std::size_t c = 0; c < cols.size(); ++c) full[cols[c]] = v[c];
    out.push_back(std::move(full));
  }
  return out;
}

void verify_space(const DerivationSpace& space, const Representation& module) {
  for (const auto& map : space.basis) {
    auto check = is_delta_derivation(map, module, space.delta);
    if (!check.ok)
      throw VerificationFailure("kernel element violates the derivation identity on pair (" +
                                std::to_string(check.i) + ", " + std::to_string(check.j) + ")");
  }
}

std::size_t leading_index(const Vector& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) return k;
  return v.size();
}

}  // namespace

DerivationSpace kernel_at(const DerivationSystem& system, const Rational& delta) {
  const Matrix m = system.at(delta);
  std::vector<Vector> vectors;
  for (const auto& comp : connected_components(support_of(m), m.cols()))
    for (auto& v : block_nullspace(m, comp.rows, comp.cols)) vectors.push_back(std::move(v));
  vectors = rref(std::move(vectors));
  DerivationSpace space;
  space.delta = delta;
  const std::size_t n = system.module.algebra()->dim(), dv = system.module.dim_v();
  for (const auto& v : vectors) space.basis.push_back(unflatten(v, n, dv));
  verify_space(space, system.module);
  return space;
}

DerivationSpace solve(const Representation& module, const Rational& delta, std::optional<std::size_t> grading_element) {
  DerivationSystem system = assemble_system(module);
  if (!grading_element) return kernel_at(system, delta);

  const Grading grading = weight_decomposition(module, *grading_element);
  const std::size_t n = module.algebra()->dim(), dv = module.dim_v();
  std::map<Rational, Component> blocks;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t mm = 0; mm < dv; ++mm)
      blocks[grading.algebra_weights[a] - grading.module_weights[mm]].cols.push_back(a * dv + mm);
  std::vector<Rational> column_weight(n * dv);
  for (const auto& [w, b] : blocks)
    for (auto c : b.cols) column_weight[c] = w;

  const Matrix m = system.at(delta);
  for (std::size_t p = 0; p < system.pairs.size(); ++p) {
    const auto [i, j] = system.pairs[p];
    for (std::size_t mm = 0; mm < dv; ++mm) {
      const std::size_t row = p * dv + mm;
      const Rational w = grading.algebra_weights[i] + grading.algebra_weights[j] - grading.module_weights[mm];
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(row, c).is_zero() && column_weight[c] != w)
          throw VerificationFailure("equation mixes weight blocks; module is not graded by this element");
      auto it = blocks.find(w);
      if (it != blocks.end()) it->second.rows.push_back(row);
    }
  }

  std::vector<std::pair<Vector, Rational>> tagged;
  for (const auto& [w, b] : blocks)
    for (auto& v : block_nullspace(m, b.rows, b.cols)) tagged.emplace_back(std::move(v), w);
  // Blocks have disjoint supports, so ordering by leading index yields the
  // reduced echelon form of the whole space.
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& x, const auto& y) { return leading_index(x.first) < leading_index(y.first); });
  DerivationSpace space;
  space.delta = delta;
  space.weights.emplace();
  for (const auto& [v, w] : tagged) {
    space.basis.push_back(unflatten(v, n, dv));
    space.weights->push_back(w);
  }
  verify_space(space, module);
  return space;
}

DerivationSpace inner_derivations(const Representation& module) {
  const std::size_t n = module.algebra()->dim(), dv = module.dim_v();
  std::vector<Vector> maps;
  for (std::size_t mm = 0; mm < dv; ++mm) {
    Matrix d(n, dv);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t r = 0; r < dv; ++r) d(a, r) = module.action(a)(r, mm);
    maps.push_back(flatten(d));
  }
  DerivationSpace space;
  space.delta = 1;
  for (const auto& v : rref(std::move(maps))) space.basis.push_back(unflatten(v, n, dv));
  return space;
}

}  // namespace deltader
