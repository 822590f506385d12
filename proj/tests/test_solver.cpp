#include <map>
#include <random>

#include "catalog.hpp"
#include "doctest.h"
#include "suite.hpp"

using namespace deltader;

namespace {

// Row a of the map holds D(e_a) in module coordinates.
Matrix map_from_rows(std::size_t dim, std::size_t dim_v, const std::vector<std::tuple<std::size_t, std::size_t, long>>& entries) {
  Matrix m(dim, dim_v);
  for (auto [a, i, c] : entries) m(a, i) = Rational(c);
  return m;
}

std::vector<Vector> flattened(const std::vector<Matrix>& maps) {
  std::vector<Vector> out;
  for (const auto& m : maps) out.push_back(flatten(m));
  return out;
}

}  // namespace

TEST_CASE("system sizes") {
  auto sys = assemble_system(sl2_module(1));
  CHECK(sys.rows() == 6);
  CHECK(sys.cols() == 6);
  auto ad3 = assemble_system(suite::from_descriptors("sl3", "adjoint"));
  CHECK(ad3.rows() == 224);
  CHECK(ad3.cols() == 64);
}

TEST_CASE("abelian algebra gives a pure delta system") {
  auto ab = std::make_shared<const LieAlgebra>(LieAlgebra::from_structure_constants(3, {}));
  Matrix d(2, 2);
  d(0, 0) = 1;
  d(1, 1) = -1;
  Representation v(ab, 2, {d, Matrix(2, 2), d * Rational(3)});
  auto sys = assemble_system(v);
  CHECK(sys.constant.is_zero());
  CHECK(!sys.linear.is_zero());
}

TEST_CASE("(e-, h) rows match the hand expansion") {
  // For a map of weight alpha with D(e-) = l v_{1-alpha}, D(h) = m v_{-alpha}, the (e-, h) equation reads
  // -(-2 l + delta m (1 - alpha) - delta l (n - 2 + 2 alpha)) v_{1-alpha} = 0.
  for (int n = 1; n <= 6; ++n) {
    auto sys = assemble_system(sl2_module(n));
    const std::size_t dv = static_cast<std::size_t>(n) + 1;
    for (int alpha = 1 - n; alpha <= 0; ++alpha) {
      const std::size_t row = 0 * dv + static_cast<std::size_t>(1 - alpha);  // pair (e-, h) is pair 0
      const std::size_t col_l = 0 * dv + static_cast<std::size_t>(1 - alpha);
      const std::size_t col_m = 1 * dv + static_cast<std::size_t>(-alpha);
      CAPTURE(n);
      CAPTURE(alpha);
      CHECK(sys.entry(row, col_l) == Poly({Rational(2), Rational(n - 2 + 2 * alpha)}));
      CHECK(sys.entry(row, col_m) == Poly({Rational(0), Rational(-(1 - alpha))}));
      for (std::size_t c = 0; c < sys.cols(); ++c)
        if (c != col_l && c != col_m) CHECK(sys.entry(row, c).is_zero());
    }
  }
}

TEST_CASE("module mismatch in derivation checks") {
  CHECK_THROWS_AS(is_delta_derivation(Matrix(3, 3), sl2_module(1), Rational(1)), ShapeMismatch);
  CHECK_THROWS_AS(is_delta_derivation(Matrix(2, 2), sl2_module(1), Rational(1)), ShapeMismatch);
}

TEST_CASE("is_delta_derivation examples") {
  CHECK(is_delta_derivation(Matrix(3, 4), sl2_module(3), Rational(7, 3)).ok);
  // Inner map for v0 in V(1): e- -> v1, h -> v0, e+ -> 0.
  CHECK(is_delta_derivation(map_from_rows(3, 2, {{0, 1, 1}, {1, 0, 1}}), sl2_module(1), Rational(1)).ok);
  // The identity of sl2 read through V(2) = adjoint is a 1/2-derivation but not a (-1)-derivation.
  Matrix id = sl2_adjoint_identification();
  CHECK(is_delta_derivation(id, sl2_module(2), Rational(1, 2)).ok);
  auto bad = is_delta_derivation(id, sl2_module(2), Rational(-1));
  CHECK(!bad.ok);
  CHECK(bad.i < bad.j);
  bool nonzero = false;
  for (const auto& x : bad.residual) nonzero |= !x.is_zero();
  CHECK(nonzero);
}

TEST_CASE("kernel_at examples") {
  auto sys2 = assemble_system(sl2_module(2));
  auto half = kernel_at(sys2, Rational(1, 2));
  REQUIRE(half.dimension() == 1);
  CHECK(span_equal(half.basis, {sl2_adjoint_identification()}));
  for (int n = 0; n <= 6; ++n) CHECK(kernel_at(assemble_system(sl2_module(n)), Rational(0)).dimension() == 0);
  auto sp = kernel_at(assemble_system(sl2_module(3)), Rational(2, 5));
  REQUIRE(sp.dimension() == 2);
  std::vector<Matrix> want{map_from_rows(3, 4, {{0, 2, 2}, {1, 1, 4}, {2, 0, -6}}),
                           map_from_rows(3, 4, {{0, 3, 6}, {1, 2, 4}, {2, 1, -2}})};
  CHECK(span_equal(sp.basis, want));
}

TEST_CASE("kernel basis is in reduced echelon form") {
  auto sp = solve(sl2_module(3), Rational(-2, 3));
  auto flat = flattened(sp.basis);
  CHECK(rref(flat) == flat);
}

TEST_CASE("solve examples") {
  CHECK(solve(sl2_module(2), Rational(-1)).dimension() == 5);
  CHECK(solve(sl2_module(4), Rational(1, 3)).dimension() == 3);
  CHECK(solve(suite::from_descriptors("sl2", "V(1) o+ V(1)"), Rational(-2)).dimension() == 8);
  CHECK(solve(sl2_module(3), Rational(1)).dimension() == 4);
  CHECK(solve(trivial_module(sl2(), 3), Rational(1, 2)).dimension() == 0);
  CHECK(solve(suite::from_descriptors("sl3", "natural"), Rational(1)).dimension() == 3);
}

TEST_CASE("graded solve tags weights") {
  auto sp = solve(sl2_module(3), Rational(-2, 3), 1);
  REQUIRE(sp.weights.has_value());
  CHECK(sp.weights->size() == sp.dimension());
  auto fam = expected_family(3, CaseTag::MinusTwoOverN);
  std::multiset<std::string> want, got;
  for (int w : fam.weights) want.insert(raw_weight(w, 3).to_string());
  for (const auto& w : *sp.weights) got.insert(w.to_string());
  CHECK(got == want);
  CHECK_THROWS_AS(solve(sl2_module(2), Rational(1), 0), NotDiagonal);
}

TEST_CASE("inner derivations") {
  for (int n = 1; n <= 6; ++n) CHECK(inner_derivations(sl2_module(n)).dimension() == static_cast<std::size_t>(n + 1));
  CHECK(inner_derivations(trivial_module(sl2(), 4)).dimension() == 0);
  auto nat = suite::from_descriptors("sl3", "natural");
  auto inner = inner_derivations(nat);
  CHECK(inner.dimension() == 3);
  CHECK(span_equal(inner.basis, solve(nat, Rational(1)).basis));
}

TEST_CASE("degenerate inputs") {
  CHECK(solve(trivial_module(sl2(), 0), Rational(-2)).dimension() == 0);
  auto line = std::make_shared<const LieAlgebra>(LieAlgebra::from_structure_constants(1, {}));
  Matrix a(2, 2);
  a(0, 1) = 1;
  Representation v(line, 2, {a});
  CHECK(assemble_system(v).rows() == 0);
  CHECK(solve(v, Rational(5)).dimension() == 2);
  CHECK(solve(v, Rational(0)).dimension() == 2);
  auto plane = std::make_shared<const LieAlgebra>(LieAlgebra::from_structure_constants(2, {}));
  CHECK(solve(trivial_module(plane, 3), Rational(1, 2)).dimension() == 6);
}

TEST_CASE("connected components") {
  auto comps = connected_components({{0, 1}, {2}, {1, 3}}, 5);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].cols == std::vector<std::size_t>{0, 1, 3});
  CHECK(comps[0].rows == std::vector<std::size_t>{0, 2});
  CHECK(comps[1].cols == std::vector<std::size_t>{2});
  CHECK(comps[2].cols == std::vector<std::size_t>{4});
  CHECK(comps[2].rows.empty());
}

TEST_CASE("property: fraction-free nullspace agrees with Gauss-Jordan on random matrices") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> shape(1, 9), entry(-3, 3), zero(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = static_cast<std::size_t>(shape(rng)), c = static_cast<std::size_t>(shape(rng));
    Matrix m(r, c);
    std::vector<std::vector<mpq_class>> o(r, std::vector<mpq_class>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        Rational x = zero(rng) == 0 ? Rational(0) : Rational(entry(rng), 1 + zero(rng));
        m(i, j) = x;
        o[i][j] = x.raw();
      }
    auto ns = nullspace(m);
    CHECK(ns.size() == c - oracle::gauss_jordan_rank(o));
    CHECK(rank(m) == oracle::gauss_jordan_rank(o));
    for (const auto& v : ns) CHECK(m.apply(v) == Vector(r));
  }
}

TEST_CASE("property: solver dimensions agree with Gauss-Jordan on every system up to 100 columns") {
  std::mt19937 rng(5);
  for (const auto& in : suite::semisimple_inputs()) {
    auto sys = assemble_system(in.module);
    if (sys.cols() > 100) continue;
    auto report = scan(in.module);
    std::vector<Rational> deltas{Rational(0), Rational(1), Rational(1, 2), Rational(-1), Rational(-2)};
    for (const auto& f : report.findings) deltas.push_back(f.delta);
    for (const auto& d : suite::random_deltas(rng, {}, 3)) deltas.push_back(d);
    for (const auto& d : deltas) {
      CAPTURE(in.name);
      CAPTURE(d);
      CHECK(kernel_at(sys, d).dimension() == suite::oracle_dimension(sys, d));
    }
  }
}

TEST_CASE("property: residuals vanish on every returned basis element") {
  for (const auto& in : suite::semisimple_inputs()) {
    for (const auto& f : scan(in.module).findings) {
      CAPTURE(in.name);
      CAPTURE(f.delta);
      auto sp = solve(in.module, f.delta);
      CHECK(sp.dimension() == f.dimension);
      CHECK(suite::residuals_vanish(sp, in.module));
    }
  }
}

TEST_CASE("property: direct-sum additivity over V(0)..V(4)") {
  std::set<Rational> deltas;
  for (int n = 0; n <= 4; ++n)
    for (const auto& f : scan(sl2_module(n)).findings) deltas.insert(f.delta);
  deltas.insert(Rational(3, 7));
  for (int a = 0; a <= 4; ++a)
    for (int b = a; b <= 4; ++b) {
      auto va = sl2_module(a), vb = sl2_module(b);
      auto sum = direct_sum_modules({va, vb});
      for (const auto& d : deltas) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(d);
        CHECK(solve(sum, d).dimension() == solve(va, d).dimension() + solve(vb, d).dimension());
      }
    }
}

TEST_CASE("property: tensor-invariants formula") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (const auto& d : {Rational(-2), Rational(-1), Rational(1, 2), Rational(2, 5)}) {
        auto va = sl2_module(a), vb = sl2_module(b);
        const std::size_t lhs = solve(tensor_module(va, vb), d).dimension();
        const std::size_t rhs =
            solve(va, d).dimension() * invariants(vb).size() + invariants(va).size() * solve(vb, d).dimension();
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(d);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("property: graded and ungraded solves coincide on sl2 inputs") {
  std::mt19937 rng(17);
  for (const auto& in : suite::semisimple_inputs()) {
    if (!in.sl2_graded) continue;
    std::vector<Rational> deltas{Rational(0), Rational(1), Rational(1, 2), Rational(-1)};
    for (const auto& f : scan(in.module).findings) deltas.push_back(f.delta);
    for (const auto& d : suite::random_deltas(rng, {}, 2)) deltas.push_back(d);
    for (const auto& d : deltas) {
      CAPTURE(in.name);
      CAPTURE(d);
      auto plain = solve(in.module, d);
      auto graded = solve(in.module, d, 1);
      CHECK(rref(flattened(graded.basis)) == flattened(plain.basis));
      CHECK(suite::residuals_vanish(graded, in.module));
    }
  }
}

TEST_CASE("property: 1-derivations are inner on semisimple inputs") {
  for (const auto& in : suite::semisimple_inputs()) {
    CAPTURE(in.name);
    auto one = solve(in.module, Rational(1));
    auto inner = inner_derivations(in.module);
    CHECK(span_equal(one.basis, inner.basis));
    CHECK(one.dimension() == in.module.dim_v() - invariants(in.module).size());
  }
}
