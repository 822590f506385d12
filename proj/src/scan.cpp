#include "scan.hpp"

#include <algorithm>
#include <set>

namespace deltader {

namespace {

bool poly_less(const PolyMatrix& m, std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2) {
  int d1 = m[r1][c1].degree(), d2 = m[r2][c2].degree();
  if (d1 != d2) return d1 < d2;
  if (c1 != c2) return c1 < c2;
  return r1 < r2;
}

Integer content(const std::vector<const Poly*>& entries) {
  Integer g = 0;
  for (const Poly* p : entries)
    for (const auto& c : p->coefficients()) g = gcd(g, c.numerator());
  return g;
}

// Scale factor s making s * q integral.
Rational denominator_lcm(const Poly& q) {
  Integer l = 1;
  for (const auto& c : q.coefficients()) l = lcm(l, c.denominator());
  return Rational(l);
}

void make_primitive(std::vector<Poly*> entries) {
  std::vector<const Poly*> view(entries.begin(), entries.end());
  Integer g = content(view);
  if (g == 0 || g == 1) return;
  Rational inv(Integer(1), g);
  for (Poly* p : entries) *p *= inv;
}

}  // namespace

std::vector<Poly> diagonalize(PolyMatrix m) {
  const std::size_t nr = m.size();
  const std::size_t nc = nr ? m[0].size() : 0;
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
  };
  // Rows are integral polynomials throughout; each row is kept primitive.
  for (std::size_t r = 0; r < nr; ++r) {
    Integer l = 1;
    for (const auto& p : m[r])
      for (const auto& c : p.coefficients()) l = lcm(l, c.denominator());
    for (auto& p : m[r]) p *= Rational(l);
    std::vector<Poly*> entries;
    for (auto& p : m[r]) entries.push_back(&p);
    make_primitive(entries);
  }

  std::vector<Poly> pivots;
  for (std::size_t k = 0; k < std::min(nr, nc); ++k) {
    bool found = false;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = k; r < nr; ++r)
      for (std::size_t c = k; c < nc; ++c) {
        if (m[r][c].is_zero()) continue;
        if (!found || poly_less(m, r, c, br, bc)) {
          br = r;
          bc = c;
          found = true;
        }
      }
    if (!found) break;
    std::swap(m[k], m[br]);
    swap_cols(k, bc);

    for (;;) {
      const Poly pivot = m[k][k];
      bool dirty = false;
      for (std::size_t i = k + 1; i < nr; ++i) {
        if (m[i][k].is_zero()) continue;
        auto [q, rem] = divmod(m[i][k], pivot);
        Rational s = denominator_lcm(q);
        Poly sq = q * s;
        std::vector<Poly*> entries;
        for (std::size_t c = k; c < nc; ++c) {
          Poly updated = m[i][c] * s;
          if (!sq.is_zero() && !m[k][c].is_zero()) updated -= sq * m[k][c];
          m[i][c] = std::move(updated);
          entries.push_back(&m[i][c]);
        }
        make_primitive(entries);
        dirty = dirty || !rem.is_zero();
      }
      for (std::size_t j = k + 1; j < nc; ++j) {
        if (m[k][j].is_zero()) continue;
        auto [q, rem] = divmod(m[k][j], pivot);
        Rational s = denominator_lcm(q);
        Poly sq = q * s;
        std::vector<Poly*> entries;
        for (std::size_t r = k; r < nr; ++r) {
          Poly updated = m[r][j] * s;
          if (!sq.is_zero() && !m[r][k].is_zero()) updated -= sq * m[r][k];
          m[r][j] = std::move(updated);
          entries.push_back(&m[r][j]);
        }
        make_primitive(entries);
        dirty = dirty || !rem.is_zero();
      }
      if (!dirty) break;
      // A remainder of lower degree than the pivot now sits in row k or
      // column k; promote the smallest one.
      std::size_t best_r = k, best_c = k;
      for (std::size_t i = k + 1; i < nr; ++i)
        if (!m[i][k].is_zero() && poly_less(m, i, k, best_r, best_c)) {
          best_r = i;
          best_c = k;
        }
      for (std::size_t j = k + 1; j < nc; ++j)
        if (!m[k][j].is_zero() && poly_less(m, k, j, best_r, best_c)) {
          best_r = k;
          best_c = j;
        }
      if (best_r != k) std::swap(m[k], m[best_r]);
      if (best_c != k) swap_cols(k, best_c);
    }
    pivots.push_back(normalize(m[k][k]));
  }
  return pivots;
}

ScanReport scan(const Representation& module, bool include_zero) {
  const DerivationSystem system = assemble_system(module);
  ScanReport report;
  report.include_zero = include_zero;
  const auto& algebra = *module.algebra();
  report.delta_zero_dimension = (algebra.dim() - algebra.derived_dim()) * module.dim_v();

  std::vector<std::vector<std::size_t>> support(system.rows());
  for (std::size_t r = 0; r < system.rows(); ++r)
    for (std::size_t c = 0; c < system.cols(); ++c)
      if (!system.constant(r, c).is_zero() || !system.linear(r, c).is_zero()) support[r].push_back(c);

  std::vector<Poly> pivots;
  for (const auto& comp : connected_components(support, system.cols())) {
    if (comp.rows.empty()) continue;
    PolyMatrix block(comp.rows.size(), std::vector<Poly>(comp.cols.size()));
    for (std::size_t r = 0; r < comp.rows.size(); ++r)
      for (std::size_t c = 0; c < comp.cols.size(); ++c) block[r][c] = system.entry(comp.rows[r], comp.cols[c]);
    for (auto& p : diagonalize(std::move(block))) pivots.push_back(std::move(p));
  }
  report.generic_rank = pivots.size();
  report.generic_kernel_dimension = system.cols() - pivots.size();

  std::set<Rational, NumDenLess> candidates;
  std::set<std::string> seen_factors;
  for (const auto& p : pivots) {
    if (p.degree() < 1) continue;
    for (const auto& r : rational_roots(p)) candidates.insert(r);
    Poly rest = strip_rational_roots(p);
    if (rest.degree() >= 2) {
      Poly sf = squarefree_part(rest);
      if (seen_factors.insert(sf.to_string()).second) report.nonrational_factors.push_back(sf);
    }
  }
  std::sort(report.nonrational_factors.begin(), report.nonrational_factors.end(), [](const Poly& a, const Poly& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a.to_string() < b.to_string();
  });
  if (include_zero)
    candidates.insert(Rational(0));
  else
    candidates.erase(Rational(0));

  for (const auto& delta : candidates) {
    std::size_t predicted = system.cols();
    for (const auto& p : pivots)
      if (!p.eval(delta).is_zero()) --predicted;
    const std::size_t dim = kernel_at(system, delta).dimension();
    if (dim != predicted)
      throw VerificationFailure("pencil rank at delta = " + delta.to_string() + " disagrees with direct elimination");
    if (dim > report.generic_kernel_dimension) report.findings.push_back({delta, dim});
  }
  return report;
}

}  // namespace deltader
