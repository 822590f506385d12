#include "catalog.hpp"

#include <map>
#include <sstream>

#include "scan.hpp"

namespace deltader {

std::string case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::DeltaOne:
      return "delta_one";
    case CaseTag::MinusTwoOverN:
      return "minus_two_over_n";
    case CaseTag::TwoOverNPlusTwo:
      return "two_over_n_plus_two";
    case CaseTag::OneHalf:
      return "one_half";
  }
  return {};
}

Rational raw_weight(int weight, int n) { return Rational(-2L * weight - n); }

Matrix sl2_adjoint_identification() {
  Matrix m(3, 3);
  m(0, 2) = 1;   // e- -> v2
  m(1, 1) = 1;   // h  -> v1
  m(2, 0) = -1;  // e+ -> -v0
  return m;
}

ExpectedFamily expected_family(int n, CaseTag tag) {
  if (n < 1) throw InvalidArgument("expected families need n >= 1");
  const auto N = static_cast<std::size_t>(n);
  ExpectedFamily f{tag, n, Rational(), 0, {}, {}};
  auto add = [&](std::initializer_list<std::tuple<std::size_t, std::size_t, Rational>> entries, int weight) {
    Matrix m(3, N + 1);
    for (const auto& [row, v, c] : entries) m(row, v) = c;
    f.basis.push_back(std::move(m));
    f.weights.push_back(weight);
  };
  constexpr std::size_t em = 0, h = 1, ep = 2;
  switch (tag) {
    case CaseTag::DeltaOne: {
      f.delta = 1;
      const Representation v = sl2_module(n);
      for (std::size_t i = 0; i <= N; ++i) {
        Matrix m(3, N + 1);
        for (std::size_t a = 0; a < 3; ++a)
          for (std::size_t r = 0; r <= N; ++r) m(a, r) = v.action(a)(r, i);
        f.basis.push_back(std::move(m));
        f.weights.push_back(-static_cast<int>(i));
      }
      break;
    }
    case CaseTag::MinusTwoOverN:
      f.delta = Rational(-2, n);
      add({{ep, N, 1}}, -n - 1);
      add({{h, N, 2}, {ep, N - 1, 1}}, -n);
      for (std::size_t k = 1; k + 1 <= N; ++k) add({{em, k + 1, -1}, {h, k, 2}, {ep, k - 1, 1}}, -static_cast<int>(k));
      add({{em, 1, -1}, {h, 0, 2}}, 0);
      add({{em, 0, 1}}, 1);
      break;
    case CaseTag::TwoOverNPlusTwo:
      if (n < 2) throw InvalidArgument("delta = 2/(n+2) family requires n >= 2");
      f.delta = Rational(2, n + 2);
      for (long k = 1; k <= n - 1; ++k) {
        const auto K = static_cast<std::size_t>(k);
        add({{em, K + 1, Rational(k * (k + 1))},
             {h, K, Rational(2 * k * (n - k))},
             {ep, K - 1, Rational(-(n - k) * (n - k + 1))}},
            -static_cast<int>(k));
      }
      break;
    case CaseTag::OneHalf:
      if (n != 2) throw InvalidArgument("identity map family requires V(n) = adjoint, i.e. n = 2");
      f.delta = Rational(1, 2);
      f.basis.push_back(sl2_adjoint_identification());
      f.weights.push_back(-1);
      break;
  }
  f.expected_dim = f.basis.size();
  return f;
}

std::vector<Matrix> expected_sl2_basis(int n, CaseTag tag) { return expected_family(n, tag).basis; }

std::size_t theorem_dimension(const std::vector<SimpleSummand>& g_parts, const std::vector<ModulePart>& v_parts,
                              const Rational& delta) {
  for (const auto& g : g_parts)
    if (g.sl_rank < 2) throw InvalidArgument("simple summands must be sl(N) with N >= 2");
  if (delta.is_zero()) return 0;
  std::size_t total = 0;
  for (const auto& part : v_parts) {
    const auto& atom = part.module;
    if (atom.kind == ModuleAtom::Kind::Trivial) continue;
    if (atom.kind == ModuleAtom::Kind::Irreducible && atom.param == 0) continue;
    if (!part.summand || *part.summand >= g_parts.size())
      throw InvalidArgument("nontrivial module part needs a valid summand index");
    const int m = g_parts[*part.summand].sl_rank;
    std::size_t contribution = 0;
    if (m == 2) {
      const int n = atom.kind == ModuleAtom::Kind::Natural ? 1 : atom.kind == ModuleAtom::Kind::Adjoint ? 2 : atom.param;
      if (delta == Rational(1))
        contribution = static_cast<std::size_t>(n + 1);
      else if (delta == Rational(-2, n))
        contribution = static_cast<std::size_t>(n + 3);
      else if (n >= 2 && delta == Rational(2, n + 2))
        contribution = static_cast<std::size_t>(n - 1);
    } else {
      if (atom.kind == ModuleAtom::Kind::Irreducible)
        throw InvalidArgument("V(n) descriptors are only implemented for sl2 summands");
      const auto M = static_cast<std::size_t>(m);
      if (atom.kind == ModuleAtom::Kind::Natural && delta == Rational(1)) contribution = M;
      if (atom.kind == ModuleAtom::Kind::Adjoint) {
        if (delta == Rational(1)) contribution = M * M - 1;
        if (delta == Rational(1, 2)) contribution = 1;
      }
    }
    total += contribution * part.multiplicity;
  }
  return total;
}

std::pair<std::vector<SimpleSummand>, std::vector<ModulePart>> theorem_parts(const AlgebraDescriptor& algebra,
                                                                             const ModuleDescriptor& module) {
  std::vector<SimpleSummand> g;
  for (int r : algebra.sl_ranks) g.push_back({r});
  auto is_trivial = [](const ModuleAtom& a) {
    return a.kind == ModuleAtom::Kind::Trivial || (a.kind == ModuleAtom::Kind::Irreducible && a.param == 0);
  };
  auto trivial_dim = [](const ModuleAtom& a) {
    return a.kind == ModuleAtom::Kind::Trivial ? static_cast<std::size_t>(a.param) : std::size_t{1};
  };
  std::vector<ModulePart> parts;
  for (const auto& term : module.terms) {
    if (term.size() == 1) {
      const auto& atom = term[0];
      if (is_trivial(atom)) {
        parts.push_back({std::nullopt, atom, 1});
      } else if (atom.kind == ModuleAtom::Kind::Adjoint) {
        for (std::size_t s = 0; s < g.size(); ++s) parts.push_back({s, atom, 1});
      } else {
        parts.push_back({0, atom, 1});
      }
      continue;
    }
    std::optional<std::size_t> nontrivial;
    std::size_t multiplicity = 1;
    for (std::size_t s = 0; s < term.size(); ++s) {
      if (is_trivial(term[s])) {
        multiplicity *= trivial_dim(term[s]);
        continue;
      }
      if (nontrivial) throw InvalidArgument("term is nontrivial over two summands; not an implemented family");
      nontrivial = s;
    }
    if (!nontrivial)
      parts.push_back({std::nullopt, ModuleAtom{ModuleAtom::Kind::Trivial, static_cast<int>(multiplicity)}, 1});
    else
      parts.push_back({nontrivial, term[*nontrivial], multiplicity});
  }
  return {g, parts};
}

bool span_equal(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  std::optional<std::pair<std::size_t, std::size_t>> shape;
  auto collect = [&](const std::vector<Matrix>& maps) {
    std::vector<Vector> rows;
    for (const auto& m : maps) {
      if (!shape) shape = std::make_pair(m.rows(), m.cols());
      if (shape->first != m.rows() || shape->second != m.cols()) throw ShapeMismatch("span_equal: maps differ in shape");
      rows.push_back(flatten(m));
    }
    return rref(std::move(rows));
  };
  auto ra = collect(a);
  auto rb = collect(b);
  return ra == rb;
}

std::size_t VerifyReport::failures() const {
  std::size_t f = 0;
  for (const auto& e : entries) f += e.status == CheckEntry::Status::Fail ? 1 : 0;
  return f;
}

namespace {

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void check(std::string name, bool ok, std::string detail) {
    report_.entries.push_back({std::move(name), ok ? CheckEntry::Status::Pass : CheckEntry::Status::Fail, std::move(detail)});
  }
  void skip(std::string name, std::string reason) {
    report_.entries.push_back({std::move(name), CheckEntry::Status::Skip, std::move(reason)});
  }
  template <class F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("error: ") + e.what());
    }
  }

 private:
  VerifyReport& report_;
};

std::string findings_string(const std::map<Rational, std::size_t, NumDenLess>& f) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [d, k] : f) {
    os << (first ? "" : ", ") << d << ": " << k;
    first = false;
  }
  os << "}";
  return os.str();
}

std::map<Rational, std::size_t, NumDenLess> findings_map(const ScanReport& r) {
  std::map<Rational, std::size_t, NumDenLess> m;
  for (const auto& f : r.findings) m[f.delta] = f.dimension;
  return m;
}

// Every expected map lies in the solver's block of the matching raw weight,
// and block sizes agree.
bool weights_agree(const ExpectedFamily& family, const DerivationSpace& graded) {
  std::map<Rational, std::vector<Matrix>> expected, solved;
  for (std::size_t k = 0; k < family.basis.size(); ++k)
    expected[raw_weight(family.weights[k], family.n)].push_back(family.basis[k]);
  for (std::size_t k = 0; k < graded.basis.size(); ++k) solved[(*graded.weights)[k]].push_back(graded.basis[k]);
  if (expected.size() != solved.size()) return false;
  for (const auto& [w, maps] : expected) {
    auto it = solved.find(w);
    if (it == solved.end() || !span_equal(maps, it->second)) return false;
  }
  return true;
}

void check_scan(Recorder& rec, const std::string& name, const Representation& module,
                const std::map<Rational, std::size_t, NumDenLess>& expected) {
  rec.guarded(name, [&] {
    ScanReport r = scan(module);
    auto got = findings_map(r);
    bool ok = got == expected && r.nonrational_factors.empty();
    rec.check(name, ok, "found " + findings_string(got) + ", expected " + findings_string(expected) +
                            (r.nonrational_factors.empty() ? "" : ", nonrational factors present"));
  });
}

}  // namespace

VerifyReport verify_all(int max_n) {
  if (max_n < 1) throw InvalidArgument("verify_all requires max_n >= 1");
  VerifyReport report;
  report.max_n = max_n;
  Recorder rec(report);
  constexpr std::size_t kH = 1;

  for (int n = 1; n <= max_n; ++n) {
    const std::string prefix = "sl2 V(" + std::to_string(n) + ") ";
    const Representation v = sl2_module(n);
    for (CaseTag tag : {CaseTag::DeltaOne, CaseTag::MinusTwoOverN, CaseTag::TwoOverNPlusTwo, CaseTag::OneHalf}) {
      const std::string name = prefix + case_name(tag);
      if (tag == CaseTag::TwoOverNPlusTwo && n < 2) {
        rec.skip(name, "requires n >= 2");
        continue;
      }
      if (tag == CaseTag::OneHalf && n != 2) continue;
      rec.guarded(name, [&] {
        ExpectedFamily family = expected_family(n, tag);
        DerivationSpace graded = solve(v, family.delta, kH);
        DerivationSpace plain = solve(v, family.delta);
        bool ok = plain.dimension() == family.expected_dim && span_equal(plain.basis, family.basis) &&
                  span_equal(graded.basis, plain.basis) && weights_agree(family, graded);
        if (tag == CaseTag::DeltaOne) ok = ok && span_equal(plain.basis, inner_derivations(v).basis);
        rec.check(name, ok,
                  "delta " + family.delta.to_string() + ": dim " + std::to_string(plain.dimension()) + ", expected " +
                      std::to_string(family.expected_dim));
      });
    }
    std::map<Rational, std::size_t, NumDenLess> expected{{Rational(1), n + 1}, {Rational(-2, n), n + 3}};
    if (n >= 2) expected[Rational(2, n + 2)] = static_cast<std::size_t>(n - 1);
    check_scan(rec, prefix + "scan", v, expected);
  }

  {
    auto [sl3, natural] = sl_n(3);
    const Representation adjoint = adjoint_module(sl3);
    rec.guarded("sl3 adjoint one_half", [&, &sl3 = sl3] {
      DerivationSpace s = solve(adjoint, Rational(1, 2));
      Matrix id = Matrix::identity(sl3->dim());
      rec.check("sl3 adjoint one_half", s.dimension() == 1 && span_equal(s.basis, {id}),
                "dim " + std::to_string(s.dimension()) + ", expected 1 (identity map)");
    });
    check_scan(rec, "sl3 adjoint scan", adjoint, {{Rational(1), 8}, {Rational(1, 2), 1}});
    rec.guarded("sl3 natural fixed delta", [&, &natural = natural] {
      std::size_t total = 0;
      for (const Rational& d : {Rational(1, 2), Rational(-1), Rational(-2, 3), Rational(2, 5)})
        total += solve(natural, d).dimension();
      rec.check("sl3 natural fixed delta", total == 0, "total dim over 1/2, -1, -2/3, 2/5: " + std::to_string(total));
    });
    check_scan(rec, "sl3 natural scan", natural, {{Rational(1), 3}});
  }

  {
    const AlgebraDescriptor g = parse_algebra_descriptor("sl2 o+ sl2");
    const ModuleDescriptor m = parse_module_descriptor("V(1) (x) V(0) o+ V(0) (x) V(2)");
    const Representation v = m.build(g);
    const auto [g_parts, v_parts] = theorem_parts(g, m);
    for (const Rational& d : {Rational(1), Rational(-2), Rational(-1), Rational(1, 2), Rational(2, 5), Rational(3)}) {
      const std::string name = "sl2 o+ sl2 assembly delta " + d.to_string();
      rec.guarded(name, [&] {
        std::size_t got = solve(v, d).dimension();
        std::size_t want = theorem_dimension(g_parts, v_parts, d);
        rec.check(name, got == want, "dim " + std::to_string(got) + ", predicted " + std::to_string(want));
      });
    }
  }
  return report;
}

}  // namespace deltader
