#include "pentagram/spectral.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pentagram/error.hpp"

namespace pentagram {

namespace {

// x (x-1) ... (x-b+1), valid for negative x.
long falling(long x, int b) {
  long out = 1;
  for (int i = 0; i < b; ++i) out *= x - i;
  return out;
}

template <class M>
auto from_characteristic(const M& t, int n) {
  using S = typename std::decay_t<decltype(characteristic_coefficients(t))>::value_type::Scalar;
  const auto c = characteristic_coefficients(t);
  const int dim = static_cast<int>(c.size()) - 1;
  const S sign = dim % 2 == 0 ? S(1) : S(-1);
  SpectralFunction<S> out;
  out.n = n;
  out.k_coeffs.resize(dim + 1);
  for (int m = 0; m <= dim; ++m) out.k_coeffs[m] = c[dim - m] * sign;
  return out;
}

template <class S>
bool fourth_power_matches(const S& root, const S& target) {
  const S p = root * root * root * root;
  if constexpr (is_exact_v<S>) {
    return p == target;
  } else {
    return ScalarTraits<S>::abs(p - target) <= S(1e-9) * ScalarTraits<S>::abs(target);
  }
}

}  // namespace

template <class S>
S SpectralFunction<S>::evaluate(const S& lambda, const S& k) const {
  return partial(0, 0, lambda, k);
}

template <class S>
S SpectralFunction<S>::partial(int a, int b, const S& lambda, const S& k) const {
  S out(0);
  for (int m = a; m <= k_degree(); ++m) {
    LaurentPoly<S> c = k_coeffs[m];
    for (int i = 0; i < b; ++i) c = c.derivative();
    if (c.is_zero()) continue;
    out += S(falling(m, a)) * ScalarTraits<S>::pow(k, m - a) * c.evaluate(lambda);
  }
  return out;
}

template <class S>
SpectralFunction<S> spectral_function(const PolyMatrix<S>& t, int n) {
  return from_characteristic(t, n);
}

template <class S>
SpectralFunction<S> spectral_function(const Abc3<S>& abc) {
  return from_characteristic(lax_matrices(abc), abc.size());
}

template <class S>
SpectralFunction<S> spectral_function(const Xyz3<S>& xyz, const std::optional<S>& i0_hint) {
  const int n = xyz.size();
  S prod(1);
  for (int j = 0; j < n; ++j) prod *= xyz.x[j] * xyz.x[j] * xyz.y[j] * xyz.z[j];
  if (ScalarTraits<S>::is_zero(prod, 0.0)) throw Error(ErrorKind::SingularMatrix, "zero (x, y, z) coordinate");
  const S i0_fourth = S(1) / prod;
  auto out = from_characteristic(lax_matrices(xyz), n);
  out.i0_fourth = i0_fourth;
  std::optional<S> i0 = i0_hint;
  if (i0) {
    if (!fourth_power_matches(*i0, i0_fourth))
      throw Error(ErrorKind::ConfigError, "I_0 hint does not match prod(x^2 y z)^(-1/4)");
  } else if (i0_fourth < S(0)) {
    out.branch_ambiguity = true;
  } else {
    i0 = ScalarTraits<S>::root(i0_fourth, 4);
  }
  if (!i0) {
    out.normalized = false;
    return out;
  }
  for (int m = 0; m <= out.k_degree(); ++m) out.k_coeffs[m] *= ScalarTraits<S>::pow(*i0, m - 4);
  out.i0_fourth = S(1);
  return out;
}

template <class S>
SpectralFunction<S> spectral_function(const CoeffSeq<S>& coeffs) {
  return from_characteristic(lax_matrices(coeffs), coeffs.n);
}

template <class S>
SpectralFunction<S> spectral_function(const TwistedPolygon<S>& poly) {
  if (poly.dim() != 3) return spectral_function(coefficients(poly));
  if (poly.size() % 2 == 1) return spectral_function(abc_from_polygon(poly));
  return spectral_function(xyz_geometric(poly));
}

template <class S>
Integrals3D<S> extract_integrals(const SpectralFunction<S>& r) {
  if (r.k_degree() != 4) throw Error(ErrorKind::ConfigError, "integrals I, J, G need a 4x4 monodromy");
  const int n = r.n;
  const int q = n / 2;
  // Float characteristic coefficients carry rounding debris outside the windows.
  auto negligible = [&](const S& c, int m) {
    if constexpr (is_exact_v<S>) {
      return c == S(0);
    } else {
      return ScalarTraits<S>::is_zero(c, 1e3 * max_abs_coeff(r.k_coeffs[m]));
    }
  };
  auto expect_monomial = [&](int m, const S& value, int exponent) {
    for (const auto& [e, c] : r.k_coeffs[m].terms()) {
      const S target = e == exponent ? value : S(0);
      if (!negligible(c - target, m))
        throw Error(ErrorKind::UnexpectedSupport, "k^" + std::to_string(m) + " coefficient has the wrong shape", m);
    }
    if (r.k_coeffs[m].coeff(exponent) == S(0))
      throw Error(ErrorKind::UnexpectedSupport, "k^" + std::to_string(m) + " coefficient is missing", m);
  };
  expect_monomial(4, S(1), 0);
  expect_monomial(0, r.normalized ? S(1) : r.i0_fourth, -2 * n);
  Integrals3D<S> out;
  out.normalized = r.normalized;
  auto read = [&](int m, int lo, const S& sign, std::vector<S>& dst) {
    for (const auto& [e, c] : r.k_coeffs[m].terms())
      if ((e < lo || e > lo + q) && !negligible(c, m))
        throw Error(ErrorKind::UnexpectedSupport, "lambda^" + std::to_string(e) + " outside its window", m);
    for (int j = 0; j <= q; ++j) dst.push_back(sign * r.k_coeffs[m].coeff(lo + j));
  };
  read(1, -2 * n, S(-1), out.I);
  read(2, -q - n, S(1), out.J);
  read(3, -n, S(-1), out.G);
  return out;
}

std::vector<std::string> admissible_codes(int n, int weight) {
  std::set<std::string> reps;
  std::string code;
  std::function<void(int, int)> walk = [&](int left, int w) {
    if (left == 0) {
      if (w != weight) return;
      std::string best = code;
      for (std::size_t s = 1; s < code.size(); ++s) best = std::min(best, code.substr(s) + code.substr(0, s));
      reps.insert(best);
      return;
    }
    for (int digit = 1; digit <= std::min(4, left); ++digit) {
      const int nw = w + (digit % 2 == 1 && digit != 4 ? 1 : 0);
      if (nw > weight) continue;
      code.push_back(static_cast<char>('0' + digit));
      walk(left - digit, nw);
      code.pop_back();
    }
  };
  walk(n, 0);
  return {reps.begin(), reps.end()};
}

template <class S>
std::pair<S, S> code_integrals(const Abc3<S>& abc, int weight) {
  const int n = abc.size();
  if (n % 2 == 0) throw Error(ErrorKind::ConfigError, "admissible codes need odd n");
  // Letter 0/1/2 stands for a/b/c.
  using Monomial = std::vector<std::pair<int, int>>;
  std::map<Monomial, int> terms;
  for (const auto& rep : admissible_codes(n, weight)) {
    Monomial base;
    int pos = 0;
    int sign = 1;
    for (char ch : rep) {
      const int digit = ch - '0';
      if (digit == 4) sign = -sign;
      else base.emplace_back(digit == 1 ? 0 : digit - 1, pos + digit - 1);
      pos += digit;
    }
    for (int s = 0; s < n; ++s) {
      Monomial m;
      for (const auto& [letter, at] : base) m.emplace_back(letter, (at + s) % n);
      std::sort(m.begin(), m.end());
      terms.emplace(std::move(m), sign);
    }
  }
  auto var = [&](int letter, int i, bool swapped) -> S {
    if (swapped) {
      if (letter == 0) return abc.c[positive_mod(i + 1, n)];
      if (letter == 2) return abc.a[positive_mod(i - 1, n)];
    }
    return letter == 0 ? abc.a[i] : (letter == 1 ? abc.b[i] : abc.c[i]);
  };
  S i_hat(0), g_hat(0);
  for (const auto& [m, sign] : terms) {
    S pi(sign), pg(sign);
    for (const auto& [letter, at] : m) {
      pi *= var(letter, at, false);
      pg *= var(letter, at, true);
    }
    i_hat += pi;
    g_hat += pg;
  }
  return {i_hat, g_hat};
}

template <class S>
ClosedResiduals<S> closedness_residuals(const SpectralFunction<S>& r) {
  if (r.k_degree() != 4) throw Error(ErrorKind::ConfigError, "closedness test needs a 4x4 monodromy");
  if (!r.normalized)
    throw Error(ErrorKind::IrrationalRoot, "closedness test needs the normalized spectral function (I_0 not in backend)");
  static constexpr std::array<std::pair<int, int>, 10> orders{
      {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}, {3, 0}, {0, 3}, {2, 1}, {1, 2}}};
  ClosedResiduals<S> out;
  const S one(1);
  for (int idx = 0; idx < 10; ++idx) {
    out.plus[idx] = r.partial(orders[idx].first, orders[idx].second, one, one);
    out.minus[idx] = r.partial(orders[idx].first, orders[idx].second, one, -one);
  }
  auto identity = [&](const S& s, const std::array<S, 10>& v) {
    return v[0] - (s * v[1] - v[3] / S(2) + s * v[6] / S(6));
  };
  out.identity_plus = identity(one, out.plus);
  out.identity_minus = identity(-one, out.minus);
  return out;
}

template <class S>
std::pair<S, S> dependency_identity(const SpectralFunction<S>& r) {
  if (r.k_degree() != 4) throw Error(ErrorKind::ConfigError, "dependency identity needs a 4x4 monodromy");
  auto at = [&](int s) {
    S total(0);
    for (int m = 0; m <= 4; ++m) {
      // Coefficient of k^m in R - s R_k + R_kk / 2 - s R_kkk / 6 at k = s, s = +-1.
      const long sign = m % 2 == 0 ? 1 : s;
      const long weight = sign * (1 - m + m * (m - 1) / 2 - m * (m - 1) * (m - 2) / 6);
      if (weight == 0) continue;
      S coeff = r.k_coeffs[m].evaluate(S(1));
      if (!r.normalized) {
        if (m % 4 != 0) throw Error(ErrorKind::IrrationalRoot, "identity needs an odd power of I_0", m);
        if (m == 0) coeff /= r.i0_fourth;
      }
      total += S(weight) * coeff;
    }
    return total;
  };
  return {at(1), at(-1)};
}

template <class S>
ClosedResiduals<S> closedness_residuals(const TwistedPolygon<S>& poly) {
  if (poly.dim() != 3) throw Error(ErrorKind::ConfigError, "closedness test is for d = 3");
  return closedness_residuals(spectral_function(poly));
}

std::pair<Mat<Rational>, Vec<Rational>> closed_condition_system(int n, int sign) {
  if (n < 1 || (sign != 1 && sign != -1)) throw Error(ErrorKind::ConfigError, "need n >= 1 and sign = +-1");
  const int q = n / 2;
  static constexpr std::array<std::pair<int, int>, 10> orders{
      {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}, {3, 0}, {0, 3}, {2, 1}, {1, 2}}};
  Mat<Rational> m = Mat<Rational>::Zero(10, 3 * (q + 1));
  Vec<Rational> rhs = Vec<Rational>::Zero(10);
  auto term = [&](int kpow, long epow, int a, int b) {
    if (a > kpow) return Rational(0);
    const long s = (kpow - a) % 2 == 0 ? 1 : sign;
    return Rational(falling(kpow, a) * s * falling(epow, b));
  };
  for (int row = 0; row < 10; ++row) {
    const auto [a, b] = orders[row];
    rhs(row) = term(4, 0, a, b) + term(0, -2L * n, a, b);
    for (int j = 0; j <= q; ++j) {
      m(row, j) = -term(1, j - 2L * n, a, b);
      m(row, q + 1 + j) = term(2, j - static_cast<long>(q) - n, a, b);
      m(row, 2 * (q + 1) + j) = -term(3, j - static_cast<long>(n), a, b);
    }
  }
  return {m, rhs};
}

#define PENTAGRAM_INSTANTIATE(S)                                                                       \
  template struct SpectralFunction<S>;                                                                 \
  template SpectralFunction<S> spectral_function<S>(const PolyMatrix<S>&, int);                        \
  template SpectralFunction<S> spectral_function<S>(const Abc3<S>&);                                   \
  template SpectralFunction<S> spectral_function<S>(const Xyz3<S>&, const std::optional<S>&);          \
  template SpectralFunction<S> spectral_function<S>(const CoeffSeq<S>&);                               \
  template SpectralFunction<S> spectral_function<S>(const TwistedPolygon<S>&);                         \
  template Integrals3D<S> extract_integrals<S>(const SpectralFunction<S>&);                            \
  template std::pair<S, S> code_integrals<S>(const Abc3<S>&, int);                                     \
  template ClosedResiduals<S> closedness_residuals<S>(const SpectralFunction<S>&);                     \
  template ClosedResiduals<S> closedness_residuals<S>(const TwistedPolygon<S>&);                      \
  template std::pair<S, S> dependency_identity<S>(const SpectralFunction<S>&);

PENTAGRAM_INSTANTIATE(Rational)
PENTAGRAM_INSTANTIATE(double)

}  // namespace pentagram
