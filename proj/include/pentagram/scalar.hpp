#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cmath>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace pentagram {

// Exact rational backed by GMP. Wraps mpq_class so that Eigen never sees
// gmpxx expression templates.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(static_cast<long>(v)) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(std::string_view text);

  const mpq_class& get() const noexcept { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational operator+() const { return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sgn(q_) == 0; }
  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  // Exact m-th root if it exists among the rationals.
  std::optional<Rational> root(unsigned m) const;
  Rational pow(long e) const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace pentagram

namespace Eigen {

template <>
struct NumTraits<pentagram::Rational> : GenericNumTraits<pentagram::Rational> {
  using Real = pentagram::Rational;
  using NonInteger = pentagram::Rational;
  using Nested = pentagram::Rational;
  using Literal = pentagram::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace pentagram {

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  static bool is_zero(const Rational& x, double = 0.0) { return x.is_zero(); }
  static Rational abs(const Rational& x) { return pentagram::abs(x); }
  static double to_double(const Rational& x) { return x.to_double(); }
  static std::string to_string(const Rational& x) { return x.to_string(); }
  static Rational parse(std::string_view s) { return Rational(s); }
  static Rational from_ratio(long p, long q) { return Rational(p, q); }
  static std::optional<Rational> root(const Rational& x, unsigned m) { return x.root(m); }
  static Rational pow(const Rational& x, long e) { return x.pow(e); }
};

namespace detail {

std::string float_to_string(long double x, int digits);
long double float_parse(std::string_view s);

}  // namespace detail

template <class F>
struct FloatScalarTraits {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static bool is_zero(F x, double scale = 1.0) { return std::abs(x) <= F(1e-12) * F(scale); }
  static F abs(F x) { return std::abs(x); }
  static double to_double(F x) { return static_cast<double>(x); }
  static std::string to_string(F x) {
    return detail::float_to_string(x, std::numeric_limits<F>::max_digits10);
  }
  static F parse(std::string_view s) { return static_cast<F>(detail::float_parse(s)); }
  static F from_ratio(long p, long q) { return static_cast<F>(p) / static_cast<F>(q); }
  static std::optional<F> root(F x, unsigned m) {
    if (m == 0 || (m % 2 == 0 && x < 0)) return std::nullopt;
    const F r = std::pow(std::abs(x), F(1) / F(m));
    return x < 0 ? -r : r;
  }
  static F pow(F x, long e) { return std::pow(x, static_cast<F>(e)); }
};

template <>
struct ScalarTraits<double> : FloatScalarTraits<double> {};
template <>
struct ScalarTraits<long double> : FloatScalarTraits<long double> {};

template <class S>
inline constexpr bool is_exact_v = ScalarTraits<S>::exact;

template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

// Converts exactly-representable data to the requested backend.
template <class S>
S convert(const Rational& r) {
  if constexpr (std::is_same_v<S, Rational>) {
    return r;
  } else {
    return static_cast<S>(r.to_double());
  }
}

template <class S>
Vec<S> convert(const Vec<Rational>& v) {
  Vec<S> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = convert<S>(v(i));
  return out;
}

template <class S>
Mat<S> convert(const Mat<Rational>& m) {
  Mat<S> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = convert<S>(m(i, j));
  return out;
}

}  // namespace pentagram
