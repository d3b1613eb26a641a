#include "pentagram/lax.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pentagram/error.hpp"

namespace pentagram {

namespace {

template <class S>
using LP = LaurentPoly<S>;

template <class S>
LP<S> mono(const S& c, int e) {
  return LP<S>::monomial(c, e);
}

template <class S>
S checked_div(const S& num, const S& den, ErrorKind kind, const std::string& what, long i) {
  if (ScalarTraits<S>::is_zero(den, 1.0)) throw Error(kind, "vanishing " + what, i);
  return num / den;
}

template <class S>
S max_abs_diff(const std::vector<S>& a, const std::vector<S>& b) {
  S out(0);
  for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, ScalarTraits<S>::abs(a[i] - b[i]));
  return out;
}

template <class S>
S xyz_diff(const Xyz3<S>& a, const Xyz3<S>& b) {
  return std::max({max_abs_diff(a.x, b.x), max_abs_diff(a.y, b.y), max_abs_diff(a.z, b.z)});
}

template <class S>
S xy_diff(const Xy2<S>& a, const Xy2<S>& b) {
  return std::max(max_abs_diff(a.x, b.x), max_abs_diff(a.y, b.y));
}

// Vertices base, ..., base + len - 1 of the polygon with coefficients c, with the standard basis
// placed mid-window and the recurrence run both ways. A short window stays well conditioned even
// when a whole period does not.
template <class S>
std::vector<Vec<S>> coeff_window(const CoeffSeq<S>& c, long base, long len) {
  const int d = c.d;
  const S sign = d % 2 == 0 ? S(1) : S(-1);
  const long mid = std::max(0L, (len - d - 1) / 2);
  std::vector<Vec<S>> vs(std::max(len, static_cast<long>(d + 1)));
  for (int i = 0; i <= d; ++i) vs[mid + i] = Vec<S>::Unit(d + 1, i);
  for (long m = mid; m + d + 1 < len; ++m) {
    vs[m + d + 1] = sign * vs[m];
    for (int k = 1; k <= d; ++k) vs[m + d + 1] += c(base + m, k) * vs[m + k];
  }
  for (long m = mid - 1; m >= 0; --m) {
    Vec<S> v = vs[m + d + 1];
    for (int k = 1; k <= d; ++k) v -= c(base + m, k) * vs[m + k];
    vs[m] = sign * v;
  }
  return vs;
}

// pts[d+2], ... written in the projective frame pts[0], ..., pts[d+1].
// Weights of pts[unit] in the basis pts[0..d], scaled so the smallest is measured against the largest.
template <class S>
S frame_balance(const std::vector<Vec<S>>& pts, int d, std::size_t unit) {
  const Vec<S> w = solve(stack_cols(std::vector<Vec<S>>(pts.begin(), pts.begin() + d + 1)), pts[unit]);
  S lo = ScalarTraits<S>::abs(w(0)), hi = lo;
  for (Eigen::Index i = 1; i < w.size(); ++i) {
    lo = std::min(lo, ScalarTraits<S>::abs(w(i)));
    hi = std::max(hi, ScalarTraits<S>::abs(w(i)));
  }
  return ScalarTraits<S>::is_zero(lo, ScalarTraits<S>::to_double(hi)) ? S(0) : lo / hi;
}

// Projective map sending pts[0..d] to the coordinate points and pts[unit] to (1, ..., 1).
template <class S>
Mat<S> standard_frame(const std::vector<Vec<S>>& pts, int d, std::size_t unit) {
  Mat<S> f = stack_cols(std::vector<Vec<S>>(pts.begin(), pts.begin() + d + 1));
  const Vec<S> weights = solve(f, pts[unit]);
  for (int i = 0; i <= d; ++i) f.col(i) *= weights(i);
  return inverse(f);
}

// Affine chart of a at its largest entry; 1 means b is not even in that chart.
template <class S>
S chart_diff(const Vec<S>& a, const Vec<S>& b) {
  Eigen::Index i = 0;
  for (Eigen::Index k = 1; k < a.size(); ++k)
    if (ScalarTraits<S>::abs(a(k)) > ScalarTraits<S>::abs(a(i))) i = k;
  if (ScalarTraits<S>::is_zero(b(i), max_abs(b))) return S(1);
  S out(0);
  for (Eigen::Index k = 0; k < a.size(); ++k) out = std::max(out, ScalarTraits<S>::abs(a(k) / a(i) - b(k) / b(i)));
  return out;
}

// Compares, window by window, the map applied to the polygon of `source` with the polygon of
// `image`, as projective classes. Each window is put in a frame of d+1 consecutive points and the
// later point with the best balanced weights; zero coefficients rule out a fixed choice.
template <class S>
S windowed_defect(const CoeffSeq<S>& source, const CoeffSeq<S>& image, const MapParams& params) {
  const int d = source.d;
  const long len = 2 * d + 4;
  const auto [lo, hi] = image_support(d, params);
  S worst(0);
  for (long j = 0; j < source.n; ++j) {
    const TwistedPolygon<S> local(coeff_window(source, j + lo, len + hi - lo), Mat<S>::Identity(d + 1, d + 1));
    std::vector<Vec<S>> mapped;
    for (long k = 0; k < len; ++k) mapped.push_back(image_vertex(local, k - lo, params));
    const auto target = coeff_window(image, j, len);
    std::size_t unit = 0;
    S best(0);
    for (std::size_t u = d + 1; u < target.size(); ++u) {
      const S b = frame_balance(target, d, u);
      if (b > best) {
        best = b;
        unit = u;
      }
    }
    if (unit == 0) throw Error(ErrorKind::DegenerateInput, "no projective frame in the scaling window", j);
    if (frame_balance(mapped, d, unit) == S(0)) return S(1);
    const Mat<S> ga = standard_frame(mapped, d, unit), gb = standard_frame(target, d, unit);
    for (std::size_t k = d + 1; k < target.size(); ++k)
      if (k != unit) worst = std::max(worst, chart_diff<S>(ga * mapped[k], gb * target[k]));
  }
  return worst;
}

bool diag_has_lambda(int d, int c) { return d % 2 == 1 ? c % 2 == 0 : c % 2 == 1; }

}  // namespace

template <class S>
PolyMatrix<S> lax_abc(const S& a, const S& b, const S& c) {
  PolyMatrix<S> l(4);
  l(0, 0) = mono(c, -1);
  l(0, 1) = mono(S(1), -1);
  l(1, 0) = LP<S>(b);
  l(1, 2) = LP<S>(S(1));
  l(2, 0) = mono(a, -1);
  l(2, 3) = mono(S(1), -1);
  l(3, 0) = LP<S>(S(-1));
  return l;
}

template <class S>
PolyMatrix<S> lax_abc_inverse(const S& a, const S& b, const S& c) {
  return lax_general_inverse<S>(3, {c, b, a});
}

template <class S>
PolyMatrix<S> lax_xyz(const S& x, const S& y, const S& z) {
  const S xy = checked_div(S(1), x * y, ErrorKind::SingularMatrix, "x*y", -1);
  const S iz = checked_div(S(1), z, ErrorKind::SingularMatrix, "z", -1);
  const S ix = checked_div(S(1), x, ErrorKind::SingularMatrix, "x", -1);
  PolyMatrix<S> l(4);
  l(0, 0) = mono(xy, -1);
  l(0, 1) = mono(xy, -1);
  l(1, 0) = LP<S>(iz);
  l(1, 2) = LP<S>(iz);
  l(2, 0) = mono(ix, -1);
  l(2, 3) = mono(ix, -1);
  l(3, 0) = LP<S>(S(-1));
  return l;
}

template <class S>
PolyMatrix<S> lax_xyz_inverse(const S& x, const S& y, const S& z) {
  PolyMatrix<S> l(4);
  l(0, 3) = LP<S>(S(-1));
  l(1, 0) = mono(x * y, 1);
  l(1, 3) = LP<S>(S(1));
  l(2, 1) = LP<S>(z);
  l(2, 3) = LP<S>(S(1));
  l(3, 2) = mono(x, 1);
  l(3, 3) = LP<S>(S(1));
  return l;
}

template <class S>
PolyMatrix<S> p_matrix_xyz(const Xyz3<S>& xyz, long i) {
  const long n = xyz.size();
  auto x = [&](long j) -> const S& { return xyz.x[positive_mod(j, n)]; };
  auto y = [&](long j) -> const S& { return xyz.y[positive_mod(j, n)]; };
  auto z = [&](long j) -> const S& { return xyz.z[positive_mod(j, n)]; };
  const S one(1);
  const S f0 = one + y(i) + z(i + 1);
  const S fm1 = one + y(i - 1) + z(i);
  const S fm2 = one + y(i - 2) + z(i - 1);
  const S rho = checked_div(one, x(i) * f0, ErrorKind::SingularStep, "x[i](1+y[i]+z[i+1])", i);
  const S sigma = checked_div(x(i - 1) * y(i - 1) * fm2, x(i) * z(i - 1) * fm1 * f0, ErrorKind::SingularStep,
                              "x[i]z[i-1](1+y[i-1]+z[i])(1+y[i]+z[i+1])", i);
  const S tau = x(i) * (one + y(i - 2) - y(i) * z(i - 1) + z(i + 1) + z(i + 1) * y(i - 2));
  const S inv_tau = checked_div(one, tau, ErrorKind::SingularStep, "x[i](1+y[i-2]-y[i]z[i-1]+z[i+1]+z[i+1]y[i-2])", i);
  const S theta = checked_div(fm2 * inv_tau, fm1, ErrorKind::SingularStep, "1+y[i-1]+z[i]", i);
  const S inv_fm1 = one / fm1;
  PolyMatrix<S> p(4);
  p(0, 1) = LP<S>(rho);
  p(0, 3) = LP<S>(-rho);
  p(1, 0) = mono(sigma * (one + z(i)), 1);
  p(1, 1) = LP<S>(-rho);
  p(1, 2) = mono(sigma, 1);
  p(1, 3) = LP<S>(rho);
  p(2, 0) = LP<S>(y(i - 1) * theta);
  p(2, 1) = LP<S>(z(i - 1) * inv_tau);
  p(2, 2) = LP<S>(-theta);
  p(2, 3) = LP<S>((one + y(i - 2)) * inv_tau);
  p(3, 0) = mono(-y(i - 1) * inv_fm1, 1);
  p(3, 2) = mono(inv_fm1, 1);
  return p;
}

template <class S>
PolyMatrix<S> lax_general_inverse(int d, const std::vector<S>& row) {
  if (d < 1 || static_cast<int>(row.size()) != d) throw Error(ErrorKind::ConfigError, "Lax row needs d coefficients");
  PolyMatrix<S> m(d + 1);
  m(0, d) = LP<S>(d % 2 == 0 ? S(1) : S(-1));
  for (int c = 0; c < d; ++c) m(c + 1, c) = diag_has_lambda(d, c) ? mono(S(1), 1) : LP<S>(S(1));
  for (int k = 1; k <= d; ++k) m(k, d) += LP<S>(row[k - 1]);
  return m;
}

template <class S>
PolyMatrix<S> lax_general(int d, const std::vector<S>& row) {
  if (d < 1 || static_cast<int>(row.size()) != d) throw Error(ErrorKind::ConfigError, "Lax row needs d coefficients");
  const S sign = d % 2 == 0 ? S(1) : S(-1);
  PolyMatrix<S> l(d + 1);
  for (int c = 0; c < d; ++c) {
    const LP<S> inv_diag = diag_has_lambda(d, c) ? mono(S(1), -1) : LP<S>(S(1));
    l(c, c + 1) = inv_diag;
    l(c, 0) += inv_diag * (-sign * row[c]);
  }
  l(d, 0) = LP<S>(sign);
  return l;
}

template <class S>
std::vector<PolyMatrix<S>> lax_matrices(const Abc3<S>& abc) {
  std::vector<PolyMatrix<S>> out;
  for (int j = 0; j < abc.size(); ++j) out.push_back(lax_abc(abc.a[j], abc.b[j], abc.c[j]));
  return out;
}

template <class S>
std::vector<PolyMatrix<S>> lax_matrices(const Xyz3<S>& xyz) {
  std::vector<PolyMatrix<S>> out;
  for (int j = 0; j < xyz.size(); ++j) {
    try {
      out.push_back(lax_xyz(xyz.x[j], xyz.y[j], xyz.z[j]));
    } catch (const Error& e) {
      throw Error(e.kind(), "zero coordinate in Lax matrix", j);
    }
  }
  return out;
}

template <class S>
std::vector<PolyMatrix<S>> lax_matrices(const CoeffSeq<S>& coeffs) {
  std::vector<PolyMatrix<S>> out;
  for (int j = 0; j < coeffs.n; ++j) {
    std::vector<S> row;
    for (int k = 1; k <= coeffs.d; ++k) row.push_back(coeffs(j, k));
    out.push_back(lax_general(coeffs.d, row));
  }
  return out;
}

template <class S>
PolyMatrix<S> monodromy(const std::vector<PolyMatrix<S>>& lax, long base) {
  if (lax.empty()) throw Error(ErrorKind::ConfigError, "monodromy of an empty Lax sequence");
  const long n = static_cast<long>(lax.size());
  PolyMatrix<S> t = lax[positive_mod(base, n)];
  for (long j = 1; j < n; ++j) t = lax[positive_mod(base + j, n)] * t;
  return t;
}

template <class S>
S lax_defect(const Xyz3<S>& now, const Xyz3<S>& next) {
  const long n = now.size();
  if (next.size() != n) throw Error(ErrorKind::ConfigError, "Lax defect needs equal lengths");
  S worst(0);
  for (long i = 0; i < n; ++i) {
    const auto lhs = lax_xyz(next.x[i], next.y[i], next.z[i]) * p_matrix_xyz(now, i);
    const auto rhs = p_matrix_xyz(now, i + 1) * lax_xyz(now.x[i], now.y[i], now.z[i]);
    const auto diff = lhs - rhs;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        for (const auto& [e, v] : diff(r, c).terms()) worst = std::max(worst, ScalarTraits<S>::abs(v));
  }
  return worst;
}

template <class S>
S verify_lax(const Xyz3<S>& xyz) {
  return lax_defect(xyz, explicit_step(xyz));
}

std::vector<long> scaling_exponents(int d) {
  if (d < 1) throw Error(ErrorKind::ConfigError, "dimension must be positive");
  std::vector<long> e(d, 0);
  if (d % 2 == 1) {
    for (int k = 1; k <= d; k += 2) e[k - 1] = 1;
    return e;
  }
  const long kappa = d / 2;
  for (long l = 1; l <= kappa; ++l) {
    e[2 * l - 1] = l;
    e[2 * l - 2] = l - 1 - kappa;
  }
  return e;
}

template <class S>
CoeffSeq<S> scaling(const CoeffSeq<S>& coeffs, const S& s) {
  const auto e = scaling_exponents(coeffs.d);
  CoeffSeq<S> out = coeffs;
  for (int k = 0; k < coeffs.d; ++k) {
    const S f = ScalarTraits<S>::pow(s, e[k]);
    for (int j = 0; j < coeffs.n; ++j) out.a(j, k) *= f;
  }
  return out;
}

template <class S>
Xy2<S> scale_xy2(const Xy2<S>& xy, const S& s) {
  Xy2<S> out = xy;
  for (auto& v : out.x) v *= s;
  for (auto& v : out.y) v /= s;
  return out;
}

template <class S>
S scaling_invariance_defect(const CoeffSeq<S>& coeffs, const S& s, const MapParams& params) {
  const auto image = coefficients(general_map(reconstruct_from_coeffs(coeffs).polygon(), params));
  return windowed_defect(scaling(coeffs, s), scaling(image, s), params);
}

template <class S>
S scaling_invariance_defect(const TwistedPolygon<S>& poly, const S& s, const MapParams& params) {
  const int d = poly.dim();
  const auto image = general_map(poly, params);
  if (std::gcd(poly.size(), d + 1) == 1)
    return windowed_defect(scaling(coefficients(poly), s), scaling(coefficients(image), s), params);
  if (d == 3 && params.p == 2 && params.r == 1 && params.centered)
    return xyz_diff(explicit_step(scale_xyz(xyz_geometric(poly), s)), scale_xyz(xyz_geometric(image), s));
  if (d == 2 && params.p == 2 && params.r == 1 && params.centered)
    return xy_diff(xy2_step(scale_xy2(xy2_from_polygon(poly), s)), scale_xy2(xy2_from_polygon(image), s));
  throw Error(ErrorKind::ConfigError, "scaling check needs gcd(n, d+1) = 1 or the pentagram map with d in {2, 3}");
}

#define PENTAGRAM_INSTANTIATE(S)                                                                    \
  template PolyMatrix<S> lax_abc<S>(const S&, const S&, const S&);                                  \
  template PolyMatrix<S> lax_abc_inverse<S>(const S&, const S&, const S&);                          \
  template PolyMatrix<S> lax_xyz<S>(const S&, const S&, const S&);                                  \
  template PolyMatrix<S> lax_xyz_inverse<S>(const S&, const S&, const S&);                          \
  template PolyMatrix<S> p_matrix_xyz<S>(const Xyz3<S>&, long);                                     \
  template PolyMatrix<S> lax_general<S>(int, const std::vector<S>&);                                \
  template PolyMatrix<S> lax_general_inverse<S>(int, const std::vector<S>&);                        \
  template std::vector<PolyMatrix<S>> lax_matrices<S>(const Abc3<S>&);                              \
  template std::vector<PolyMatrix<S>> lax_matrices<S>(const Xyz3<S>&);                              \
  template std::vector<PolyMatrix<S>> lax_matrices<S>(const CoeffSeq<S>&);                          \
  template PolyMatrix<S> monodromy<S>(const std::vector<PolyMatrix<S>>&, long);                     \
  template S lax_defect<S>(const Xyz3<S>&, const Xyz3<S>&);                                         \
  template S verify_lax<S>(const Xyz3<S>&);                                                         \
  template CoeffSeq<S> scaling<S>(const CoeffSeq<S>&, const S&);                                    \
  template Xy2<S> scale_xy2<S>(const Xy2<S>&, const S&);                                            \
  template S scaling_invariance_defect<S>(const CoeffSeq<S>&, const S&, const MapParams&);          \
  template S scaling_invariance_defect<S>(const TwistedPolygon<S>&, const S&, const MapParams&);

PENTAGRAM_INSTANTIATE(Rational)
PENTAGRAM_INSTANTIATE(double)

}  // namespace pentagram
