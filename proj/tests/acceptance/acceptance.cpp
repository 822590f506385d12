// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Comparisons are exact; each criterion also has a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "catalog.hpp"
#include "suite.hpp"

using namespace deltader;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << what;
      ok = false;
    }
  }
};

std::map<Rational, std::size_t> findings_of(const ScanReport& r) {
  std::map<Rational, std::size_t> out;
  for (const auto& f : r.findings) out[f.delta] = f.dimension;
  return out;
}

std::string show(const std::map<Rational, std::size_t>& m) {
  std::string s = "{";
  for (const auto& [d, n] : m) s += (s.size() > 1 ? ", " : "") + d.to_string() + ": " + std::to_string(n);
  return s + "}";
}

// Places a map for one sl2 summand into the block of a larger map.
Matrix embed(const Matrix& small, std::size_t rows, std::size_t cols, std::size_t row0, std::size_t col0) {
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < small.rows(); ++r)
    for (std::size_t c = 0; c < small.cols(); ++c) out(row0 + r, col0 + c) = small(r, c);
  return out;
}

void criterion_1(Outcome& o) {
  for (int n = 1; n <= 8; ++n) {
    auto v = sl2_module(n);
    std::vector<std::pair<CaseTag, std::size_t>> cases{{CaseTag::DeltaOne, n + 1u}, {CaseTag::MinusTwoOverN, n + 3u}};
    if (n >= 2) cases.push_back({CaseTag::TwoOverNPlusTwo, n - 1u});
    for (auto [tag, dim] : cases) {
      auto fam = expected_family(n, tag);
      auto sp = solve(v, fam.delta);
      const std::string at = "n=" + std::to_string(n) + " delta=" + fam.delta.to_string();
      o.require(sp.dimension() == dim, at + ": dim " + std::to_string(sp.dimension()) + " != " + std::to_string(dim));
      o.require(span_equal(sp.basis, fam.basis), at + ": span differs from the closed-form basis");
    }
  }
}

void criterion_2(Outcome& o) {
  for (int n = 1; n <= 8; ++n) {
    auto r = scan(sl2_module(n));
    std::map<Rational, std::size_t> want{{Rational(1), n + 1u}, {Rational(-2, n), n + 3u}};
    if (n >= 2) want[Rational(2, n + 2)] = n - 1u;
    auto got = findings_of(r);
    o.require(got == want, "n=" + std::to_string(n) + ": got " + show(got) + ", want " + show(want));
    o.require(r.nonrational_factors.empty(), "n=" + std::to_string(n) + ": nonrational factors present");
  }
}

void criterion_3(Outcome& o) {
  auto got = findings_of(scan(adjoint_module(sl2())));
  std::map<Rational, std::size_t> want{{Rational(1), 3}, {Rational(-1), 5}, {Rational(1, 2), 1}};
  o.require(got == want, "got " + show(got));
}

void criterion_4(Outcome& o) {
  auto adj = suite::from_descriptors("sl3", "adjoint");
  auto half = solve(adj, Rational(1, 2));
  o.require(half.dimension() == 1, "sl3 adjoint at 1/2: dim " + std::to_string(half.dimension()));
  o.require(span_equal(half.basis, {Matrix::identity(8)}), "sl3 adjoint at 1/2 does not span the identity");
  auto nat = suite::from_descriptors("sl3", "natural");
  for (const auto& d : {Rational(1, 2), Rational(-1), Rational(-2, 3), Rational(2, 5)}) {
    auto sp = solve(nat, d);
    o.require(sp.dimension() == 0, "sl3 natural at " + d.to_string() + ": dim " + std::to_string(sp.dimension()));
  }
  auto got = findings_of(scan(adj));
  std::map<Rational, std::size_t> want{{Rational(1), 8}, {Rational(1, 2), 1}};
  o.require(got == want, "sl3 adjoint scan: got " + show(got));
}

void criterion_5(Outcome& o) {
  const auto alg = parse_algebra_descriptor("sl2 o+ sl2");
  const auto mod = parse_module_descriptor("V(1) (x) V(0) o+ V(0) (x) V(2)");
  const auto v = mod.build(alg);
  const auto [gp, vp] = theorem_parts(alg, mod);
  // Closed-form bases per summand: V(1) sits in rows 0..2 / cols 0..1, V(2) in rows 3..5 / cols 2..4.
  auto first = [](CaseTag t) {
    std::vector<Matrix> out;
    for (const auto& m : expected_sl2_basis(1, t)) out.push_back(embed(m, 6, 5, 0, 0));
    return out;
  };
  auto second = [](CaseTag t) {
    std::vector<Matrix> out;
    for (const auto& m : expected_sl2_basis(2, t)) out.push_back(embed(m, 6, 5, 3, 2));
    return out;
  };
  auto join = [](std::vector<Matrix> a, const std::vector<Matrix>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  const std::vector<std::tuple<Rational, std::size_t, std::vector<Matrix>>> cases{
      {Rational(1), 5, join(first(CaseTag::DeltaOne), second(CaseTag::DeltaOne))},
      {Rational(-2), 4, first(CaseTag::MinusTwoOverN)},
      {Rational(-1), 5, second(CaseTag::MinusTwoOverN)},
      {Rational(1, 2), 1, second(CaseTag::OneHalf)},
  };
  for (const auto& [d, dim, expected] : cases) {
    auto sp = solve(v, d);
    const std::size_t predicted = theorem_dimension(gp, vp, d);
    const std::string at = "delta=" + d.to_string();
    o.require(sp.dimension() == dim, at + ": dim " + std::to_string(sp.dimension()));
    o.require(predicted == dim, at + ": theorem_dimension " + std::to_string(predicted));
    o.require(span_equal(sp.basis, expected), at + ": span differs from the assembled closed forms");
  }
}

void criterion_6(Outcome& o) {
  std::mt19937 rng(20261017);
  const auto inputs = suite::semisimple_inputs();

  // Residuals, oracle elimination, random non-exceptional delta.
  for (const auto& in : inputs) {
    auto sys = assemble_system(in.module);
    auto report = scan(in.module);
    std::set<std::pair<long, long>> reported;
    std::vector<Rational> deltas{Rational(1), Rational(1, 2), Rational(-1)};
    for (const auto& f : report.findings) {
      deltas.push_back(f.delta);
      reported.insert({f.delta.numerator().get_si(), f.delta.denominator().get_si()});
    }
    for (const auto& d : deltas) {
      auto sp = kernel_at(sys, d);
      o.require(suite::residuals_vanish(sp, in.module), in.name + ": nonzero residual at " + d.to_string());
      if (sys.cols() <= 100)
        o.require(sp.dimension() == suite::oracle_dimension(sys, d),
                  in.name + ": Gauss-Jordan disagrees at " + d.to_string());
    }
    for (const auto& d : suite::random_deltas(rng, reported, 20)) {
      auto sp = kernel_at(sys, d);
      o.require(sp.dimension() == 0, in.name + ": nonzero kernel at random delta " + d.to_string());
      if (sys.cols() <= 100)
        o.require(suite::oracle_dimension(sys, d) == 0, in.name + ": Gauss-Jordan kernel at " + d.to_string());
    }
    if (in.sl2_graded)
      for (const auto& d : deltas) {
        auto plain = solve(in.module, d), graded = solve(in.module, d, 1);
        std::vector<Vector> a, b;
        for (const auto& m : plain.basis) a.push_back(flatten(m));
        for (const auto& m : graded.basis) b.push_back(flatten(m));
        o.require(rref(b) == a, in.name + ": graded solve differs at " + d.to_string());
      }
  }

  // Direct-sum additivity over V(0)..V(4) at every exceptional value of those modules.
  std::set<Rational> union_deltas;
  for (int n = 0; n <= 4; ++n)
    for (const auto& f : scan(sl2_module(n)).findings) union_deltas.insert(f.delta);
  o.require(union_deltas.size() >= 4, "fewer than 4 additivity test values");
  for (int a = 0; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (const auto& d : union_deltas) {
        auto va = sl2_module(a), vb = sl2_module(b);
        o.require(solve(direct_sum_modules({va, vb}), d).dimension() ==
                      solve(va, d).dimension() + solve(vb, d).dimension(),
                  "additivity fails for V(" + std::to_string(a) + ") + V(" + std::to_string(b) + ") at " + d.to_string());
      }

  // Tensor-invariants formula.
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (const auto& d : {Rational(-2), Rational(-1), Rational(1, 2), Rational(2, 5)}) {
        auto va = sl2_module(a), vb = sl2_module(b);
        const std::size_t lhs = solve(tensor_module(va, vb), d).dimension();
        const std::size_t rhs =
            solve(va, d).dimension() * invariants(vb).size() + invariants(va).size() * solve(vb, d).dimension();
        o.require(lhs == rhs, "tensor formula fails for V(" + std::to_string(a) + ") (x) V(" + std::to_string(b) +
                                  ") at " + d.to_string());
      }
}

void criterion_7(Outcome& o) {
  for (const auto& in : suite::semisimple_inputs()) {
    auto one = solve(in.module, Rational(1));
    auto inner = inner_derivations(in.module);
    o.require(span_equal(one.basis, inner.basis), in.name + ": Der_1 is not spanned by inner derivations");
    const std::size_t want = in.module.dim_v() - invariants(in.module).size();
    o.require(one.dimension() == want,
              in.name + ": dim Der_1 = " + std::to_string(one.dimension()) + ", dim V - dim V^g = " + std::to_string(want));
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "sl2 classification table, n = 1..8, with span equality", 5, criterion_1},
      {2, "scan(sl2, V(n)) exact for n = 1..8, no nonrational factors", 30, criterion_2},
      {3, "scan(sl2, adjoint) = {-1: 5, 1: 3, 1/2: 1}", 2, criterion_3},
      {4, "sl3: adjoint at 1/2 is the identity line, natural vanishes, scan {1: 8, 1/2: 1}", 60, criterion_4},
      {5, "sl2 o+ sl2 assembly matches theorem_dimension and closed-form spans", 10, criterion_5},
      {6, "property suites", 600, criterion_6},
      {7, "Der_1 equals inner derivations with dim V - dim V^g", 600, criterion_7},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= c.budget_seconds, "over the time budget");
    failures += o.ok ? 0 : 1;
    std::printf("%s criterion %d: %s (%.2f s, budget %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                c.budget_seconds, o.ok ? "" : " -- ", o.notes.str().c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
