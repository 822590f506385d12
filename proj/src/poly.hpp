#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace deltader {

/// Univariate polynomial in delta over the rationals. Coefficients are stored
/// lowest degree first; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  /// c * delta^k
  static Poly monomial(const Rational& c, int k);
  /// Product of (delta - r) over the given roots.
  static Poly from_roots(const std::vector<Rational>& roots);
  /// Parses the output format of to_string(), e.g. "2 + 3*d" or "-1 + 1*d^2".
  static Poly parse(std::string_view text);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

  Rational eval(const Rational& x) const;
  Poly derivative() const;

  /// "c0 + c1*d + c2*d^2", skipping zero terms; "0" for the zero polynomial.
  std::string to_string() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder over Q. Throws on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Product of the distinct irreducible factors, normalized.
Poly squarefree_part(const Poly& p);

/// Scales p so the coefficients are coprime integers with a positive leading
/// coefficient. Zero maps to zero.
Poly normalize(const Poly& p);

/// Exact rational roots, deduplicated and sorted by (numerator, denominator).
/// Throws InvalidArgument for the zero polynomial.
std::vector<Rational> rational_roots(const Poly& p);

/// Divides out every rational linear factor (with multiplicity) and returns
/// the normalized cofactor.
Poly strip_rational_roots(const Poly& p);

}  // namespace deltader
