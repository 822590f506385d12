#include "rational.hpp"

#include <cctype>

#include "error.hpp"

namespace deltader {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  }
  Integer v(std::string(text.substr(i)), 10);
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw InvalidArgument("empty rational");
  std::string_view body = text.substr(first, last - first + 1);
  auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(body, text));
  std::string_view den_text = body.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  return Rational(parse_integer(body.substr(0, slash), text), parse_integer(den_text, text));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool NumDenLess::operator()(const Rational& a, const Rational& b) const {
  int c = cmp(a.raw().get_num(), b.raw().get_num());
  if (c != 0) return c < 0;
  return cmp(a.raw().get_den(), b.raw().get_den()) < 0;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace deltader
