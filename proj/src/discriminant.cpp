#include <algorithm>
#include <string>

#include "pentagram/error.hpp"
#include "pentagram/spectral.hpp"

namespace pentagram {

namespace {

// Dense polynomial in lambda, ascending powers, no trailing zeros.
using UPoly = std::vector<Rational>;
// Polynomial in k with coefficients in Q[lambda], ascending powers of k.
using KPoly = std::vector<UPoly>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void trim(KPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree(const KPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

UPoly neg(UPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

UPoly power(const UPoly& a, int e) {
  UPoly out{Rational(1)};
  for (int i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

// Quotient and remainder over Q.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (degree(a) < degree(b)) return {{}, a};
  UPoly quot(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  for (int i = degree(a) - degree(b); i >= 0; --i) {
    const Rational f = a[i + degree(b)] / lead;
    quot[i] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= f * b[j];
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw Error(ErrorKind::NonGeneric, "inexact division in subresultant sequence");
  return q;
}

UPoly derivative(const UPoly& a) {
  UPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * Rational(static_cast<long>(i)));
  trim(out);
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

KPoly scale(const KPoly& p, const UPoly& f) {
  KPoly out;
  for (const auto& c : p) out.push_back(mul(c, f));
  trim(out);
  return out;
}

// lc(B)^{deg A - deg B + 1} A mod B.
KPoly pseudo_remainder(KPoly a, const KPoly& b) {
  const int db = degree(b);
  const UPoly& lead = b.back();
  for (int i = degree(a); i >= db; --i) {
    const UPoly top = i < static_cast<int>(a.size()) ? a[i] : UPoly{};
    a = scale(a, lead);
    a.resize(std::max<std::size_t>(a.size(), i + 1));
    for (int j = 0; j <= db; ++j) a[i - db + j] = add(a[i - db + j], neg(mul(top, b[j])));
    trim(a);
  }
  return a;
}

// Resultant over Q[lambda] through the subresultant remainder sequence.
UPoly resultant(KPoly a, KPoly b) {
  if (a.empty() || b.empty()) return {};
  int s = 1;
  if (degree(a) < degree(b)) {
    if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -1;
    std::swap(a, b);
  }
  UPoly g{Rational(1)}, h{Rational(1)};
  while (true) {
    const int delta = degree(a) - degree(b);
    if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -s;
    KPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return {};
    const UPoly divisor = mul(g, power(h, delta));
    b.clear();
    for (const auto& c : r) b.push_back(exact_div(c, divisor));
    trim(b);
    g = a.back();
    if (delta == 0) {
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_div(power(g, delta), power(h, delta - 1));
    }
    if (degree(b) == 0) {
      const int da = degree(a);
      UPoly out = da == 0 ? UPoly{Rational(1)} : exact_div(power(b[0], da), power(h, da - 1));
      return s == 1 ? out : neg(out);
    }
  }
}

KPoly polynomial_form(const SpectralFunction<Rational>& r) {
  const int shift = 2 * r.n;
  KPoly p;
  for (int m = 0; m <= r.k_degree(); ++m) {
    UPoly c;
    for (const auto& [e, v] : r.k_coeffs[m].terms()) {
      if (e + shift < 0)
        throw Error(ErrorKind::UnexpectedSupport, "lambda^" + std::to_string(e) + " below lambda^{-2n}", m);
      c.resize(std::max<std::size_t>(c.size(), e + shift + 1), Rational(0));
      c[e + shift] = v;
    }
    trim(c);
    p.push_back(std::move(c));
  }
  trim(p);
  return p;
}

KPoly k_derivative(const KPoly& p) {
  KPoly out;
  for (std::size_t m = 1; m < p.size(); ++m) {
    UPoly c = p[m];
    for (auto& v : c) v *= Rational(static_cast<long>(m));
    out.push_back(std::move(c));
  }
  trim(out);
  return out;
}

Rational eval(const UPoly& p, const Rational& x) {
  Rational out(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) out = out * x + *it;
  return out;
}

}  // namespace

std::vector<Rational> discriminant_in_lambda(const SpectralFunction<Rational>& r) {
  const KPoly p = polynomial_form(r);
  const int m = degree(p);
  if (m < 1) throw Error(ErrorKind::ConfigError, "spectral function has no k dependence");
  UPoly res = resultant(p, k_derivative(p));
  if ((m * (m - 1) / 2) % 2 == 1) res = neg(res);
  return exact_div(res, p.back());
}

Rational sylvester_resultant_at(const SpectralFunction<Rational>& r, const Rational& lambda) {
  const KPoly p = polynomial_form(r);
  std::vector<Rational> a, b;
  for (const auto& c : p) a.push_back(eval(c, lambda));
  for (std::size_t i = 1; i < a.size(); ++i) b.push_back(a[i] * Rational(static_cast<long>(i)));
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  const int size = da + db;
  Mat<Rational> syl = Mat<Rational>::Zero(size, size);
  for (int row = 0; row < db; ++row)
    for (int i = 0; i <= da; ++i) syl(row, row + i) = a[da - i];
  for (int row = 0; row < da; ++row)
    for (int i = 0; i <= db; ++i) syl(db + row, row + i) = b[db - i];
  return determinant(syl);
}

BranchCensus finite_branch_count(const SpectralFunction<Rational>& r, bool strict) {
  if (r.k_degree() != 4) throw Error(ErrorKind::ConfigError, "branch census is for the 4x4 monodromy");
  const UPoly disc = discriminant_in_lambda(r);
  if (disc.empty()) throw Error(ErrorKind::NonGeneric, "discriminant vanishes identically");
  BranchCensus out;
  while (disc[out.lambda_valuation].is_zero()) ++out.lambda_valuation;
  const UPoly stripped(disc.begin() + out.lambda_valuation, disc.end());
  out.nu_finite = degree(stripped);
  out.squarefree = degree(gcd(stripped, derivative(stripped))) == 0;
  // Branch points over lambda = 0 and infinity come from the pole/zero table, not from the census.
  out.nu = r.n % 2 == 1 ? out.nu_finite + 3 : out.nu_finite;
  out.genus = (out.nu - 6) / 2;
  if (strict && !out.squarefree)
    throw Error(ErrorKind::NonGeneric,
                "stripped discriminant has a repeated factor (nu_fin = " + std::to_string(out.nu_finite) + ")");
  return out;
}

}  // namespace pentagram
