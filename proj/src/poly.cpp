#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>

#include "error.hpp"

namespace deltader {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly Poly::monomial(const Rational& c, int k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Rational>& roots) {
  Poly result(Rational(1));
  for (const auto& r : roots) result = result * Poly({-r, Rational(1)});
  return result;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return Poly(std::move(d));
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[k].to_string();
    if (k == 1) out += "*d";
    if (k > 1) out += "*d^" + std::to_string(k);
  }
  return out;
}

Poly Poly::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty polynomial", 0);
  // Split into signed terms.
  std::vector<std::string> terms;
  std::string current;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool binary_minus = c == '-' && i > 0 && s[i - 1] != '+' && s[i - 1] != '^' && s[i - 1] != '*';
    if (c == '+' || binary_minus) {
      if (current.empty() && c == '+') throw ParseError("dangling '+'", i);
      if (!current.empty()) terms.push_back(current);
      current = binary_minus ? "-" : "";
    } else {
      current.push_back(c);
    }
  }
  if (current.empty()) throw ParseError("trailing operator", s.size());
  terms.push_back(current);

  std::map<int, Rational> acc;
  for (const auto& term : terms) {
    std::string coef = term;
    int power = 0;
    auto dpos = term.find('d');
    if (dpos != std::string::npos) {
      coef = term.substr(0, dpos);
      std::string rest = term.substr(dpos + 1);
      if (rest.empty()) {
        power = 1;
      } else if (rest[0] == '^' && rest.size() > 1 &&
                 std::all_of(rest.begin() + 1, rest.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        power = std::stoi(rest.substr(1));
      } else {
        throw ParseError("malformed power in '" + term + "'", dpos);
      }
      if (!coef.empty() && coef.back() == '*') coef.pop_back();
      if (coef.empty() || coef == "+") coef = "1";
      if (coef == "-") coef = "-1";
    }
    try {
      acc[power] += Rational::parse(coef);
    } catch (const InvalidArgument&) {
      throw ParseError("malformed coefficient '" + coef + "'", 0);
    }
  }
  std::vector<Rational> v(static_cast<std::size_t>(acc.rbegin()->first) + 1);
  for (const auto& [k, c] : acc) v[static_cast<std::size_t>(k)] = c;
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  Rational lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

namespace {

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = make_monic(r);
  }
  return make_monic(x);
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return normalize(p);
  Poly g = gcd(p, p.derivative());
  return normalize(divmod(p, g).first);
}

Poly normalize(const Poly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) den_lcm = lcm(den_lcm, c.denominator());
  Integer content = 0;
  for (const auto& c : p.coefficients()) content = gcd(content, Integer(c.numerator() * (den_lcm / c.denominator())));
  Rational scale(den_lcm, content);
  if (p.leading().sign() < 0) scale = -scale;
  return p * scale;
}

namespace {

using ModPoly = std::vector<std::int64_t>;  // lowest degree first, reduced mod p

void trim_mod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t r = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, std::int64_t p) {
  std::int64_t inv = mod_pow(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    std::int64_t c = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
    trim_mod(a);
  }
  return a;
}

int mod_gcd_degree(ModPoly a, ModPoly b, std::int64_t p) {
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer eval_int(const std::vector<Integer>& f, const Integer& x, const Integer& mod) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * x + *it;
    acc %= mod;
  }
  if (acc < 0) acc += mod;
  return acc;
}

// Recovers a/b from r mod m with |a|, b <= bound, if such a pair exists.
bool rational_reconstruct(const Integer& r, const Integer& m, const Integer& bound, Rational& out) {
  Integer r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (abs(r1) > bound) {
    Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  out = Rational(r1, t1);
  return true;
}

// Rational roots of a squarefree primitive integer polynomial with nonzero
// constant term, by Hensel lifting roots modulo a good prime.
std::vector<Rational> squarefree_roots(const Poly& g) {
  std::vector<Integer> f;
  for (const auto& c : g.coefficients()) f.push_back(c.numerator());
  const int deg = g.degree();
  if (deg <= 0) return {};
  if (deg == 1) return {Rational(-f[0], f[1])};

  std::vector<Integer> df;
  for (int k = 1; k <= deg; ++k) df.push_back(f[static_cast<std::size_t>(k)] * k);

  auto reduce = [](const std::vector<Integer>& v, std::int64_t p) {
    ModPoly out;
    Integer pp = static_cast<long>(p);
    for (const auto& c : v) {
      Integer r = c % pp;
      if (r < 0) r += pp;
      out.push_back(r.get_si());
    }
    trim_mod(out);
    return out;
  };

  std::int64_t p = 3;
  ModPoly fp;
  for (;; p += 2) {
    if (!is_prime(p)) continue;
    Integer lc_mod = f.back() % static_cast<long>(p);
    if (lc_mod == 0) continue;
    fp = reduce(f, p);
    ModPoly dfp = reduce(df, p);
    if (dfp.empty()) continue;
    if (mod_gcd_degree(fp, dfp, p) == 0) break;
  }

  std::vector<std::int64_t> base_roots;
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t acc = 0;
    for (auto it = fp.rbegin(); it != fp.rend(); ++it) acc = (acc * x + *it) % p;
    if (acc == 0) base_roots.push_back(x);
  }

  Integer bound = abs(f.front()) > abs(f.back()) ? Integer(abs(f.front())) : Integer(abs(f.back()));
  Integer target = 2 * (bound + 1) * (bound + 1);

  std::vector<Rational> roots;
  for (std::int64_t r0 : base_roots) {
    Integer modulus = static_cast<long>(p);
    Integer r = static_cast<long>(r0);
    while (modulus <= target) {
      modulus *= modulus;
      Integer fv = eval_int(f, r, modulus);
      Integer dv = eval_int(df, r, modulus);
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw VerificationFailure("Hensel lifting hit a non-simple root");
      r = (r - fv * inv) % modulus;
      if (r < 0) r += modulus;
    }
    Rational cand;
    if (rational_reconstruct(r, modulus, bound, cand) && g.eval(cand).is_zero()) roots.push_back(cand);
  }
  return roots;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw InvalidArgument("rational_roots of the zero polynomial: every value is a root");
  Poly f = normalize(p);
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (f.coefficients()[low].is_zero()) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    f = Poly(std::vector<Rational>(f.coefficients().begin() + static_cast<std::ptrdiff_t>(low), f.coefficients().end()));
  }
  for (auto& r : squarefree_roots(squarefree_part(f))) roots.push_back(std::move(r));
  std::sort(roots.begin(), roots.end(), NumDenLess{});
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (const auto& r : roots)
    if (!p.eval(r).is_zero()) throw VerificationFailure("rational root candidate failed evaluation");
  return roots;
}

Poly strip_rational_roots(const Poly& p) {
  if (p.is_zero()) return p;
  Poly f = normalize(p);
  for (const auto& r : rational_roots(f)) {
    Poly lin({-r, Rational(1)});
    for (;;) {
      auto [q, rem] = divmod(f, lin);
      if (!rem.is_zero()) break;
      f = q;
    }
  }
  return normalize(f);
}

}  // namespace deltader
