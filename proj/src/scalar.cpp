#include "pentagram/scalar.hpp"

#include <cstdlib>
#include <cstdio>
#include <ostream>

#include "pentagram/error.hpp"

namespace pentagram {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      q_ = mpq_class(mpz_class(s, 10));
    } else {
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den(s.substr(slash + 1), 10);
      if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational '" + s + "' has zero denominator");
      q_ = mpq_class(num, den);
      q_.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "cannot parse rational '" + s + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::optional<Rational> Rational::root(unsigned m) const {
  if (m == 0) return std::nullopt;
  if (m % 2 == 0 && sign() < 0) return std::nullopt;
  const mpz_class num_abs = abs(q_.get_num());
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num_abs.get_mpz_t(), m) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), q_.get_den().get_mpz_t(), m) == 0) return std::nullopt;
  if (sign() < 0) rn = -rn;
  return Rational(mpq_class(rn, rd));
}

Rational Rational::pow(long e) const {
  Rational base = e < 0 ? Rational(1) / *this : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpq_class out(1);
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), base.q_.get_num_mpz_t(), k);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), base.q_.get_den_mpz_t(), k);
  return Rational(out);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

namespace detail {

std::string float_to_string(long double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
  return buf;
}

long double float_parse(std::string_view s) {
  if (s.find('/') != std::string_view::npos) return Rational(s).to_double();
  const std::string str(s);
  char* end = nullptr;
  const long double out = std::strtold(str.c_str(), &end);
  if (str.empty() || end != str.c_str() + str.size())
    throw Error(ErrorKind::ParseError, "cannot parse number '" + str + "'");
  return out;
}

}  // namespace detail

}  // namespace pentagram
