#include "pentagram/coordinates.hpp"

#include <map>
#include <string>

#include "pentagram/error.hpp"

namespace pentagram {

namespace {

template <class S>
S divide(const S& num, const S& den, ErrorKind kind, const char* what, long i) {
  if (ScalarTraits<S>::is_zero(den, 1.0)) throw Error(kind, std::string("vanishing ") + what, i);
  return num / den;
}

template <class S>
void require_3d(const TwistedPolygon<S>& poly) {
  if (poly.dim() != 3) throw Error(ErrorKind::ConfigError, "3D coordinates need d = 3");
}

// Ratio u / v for parallel vectors, read off the largest coordinate of v.
template <class S>
S vector_ratio(const Vec<S>& u, const Vec<S>& v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (ScalarTraits<S>::abs(v(i)) > ScalarTraits<S>::abs(v(best))) best = i;
  return u(best) / v(best);
}

template <class S>
S det4(const Vec<S>& a, const Vec<S>& b, const Vec<S>& c, const Vec<S>& d) {
  return determinant(stack_cols(std::vector<Vec<S>>{a, b, c, d}));
}

}  // namespace

template <class S>
std::array<S, 3> QuasiAbc<S>::at(long j) const {
  const long n = abc.size();
  const long r = positive_mod(j, n);
  std::array<S, 3> out{abc.a[r], abc.b[r], abc.c[r]};
  for (long m = r; m + n <= j; m += n) {
    const S& tj = t[m % 4];
    out[0] = out[0] * tj / t[(m + 3) % 4];
    out[1] = out[1] * tj / t[(m + 2) % 4];
    out[2] = out[2] * tj / t[(m + 1) % 4];
  }
  return out;
}

template <class S>
Abc3<S> abc_from_coeffs(const CoeffSeq<S>& coeffs) {
  if (coeffs.d != 3) throw Error(ErrorKind::ConfigError, "abc coordinates need d = 3");
  Abc3<S> out;
  for (int j = 0; j < coeffs.n; ++j) {
    out.a.push_back(coeffs.a(j, 2));
    out.b.push_back(coeffs.a(j, 1));
    out.c.push_back(coeffs.a(j, 0));
  }
  return out;
}

template <class S>
CoeffSeq<S> coeffs_from_abc(const Abc3<S>& abc) {
  const int n = abc.size();
  CoeffSeq<S> out{3, n, Mat<S>(n, 3)};
  for (int j = 0; j < n; ++j) {
    out.a(j, 0) = abc.c[j];
    out.a(j, 1) = abc.b[j];
    out.a(j, 2) = abc.a[j];
  }
  return out;
}

template <class S>
Abc3<S> abc_from_polygon(const TwistedPolygon<S>& poly, const Tolerance& tol) {
  require_3d(poly);
  return abc_from_coeffs(coefficients(poly, tol));
}

template <class S>
QuasiAbc<S> quasi_abc_from_polygon(const TwistedPolygon<S>& poly) {
  require_3d(poly);
  const int n = poly.size();
  std::vector<Vec<S>> v;
  for (int j = 0; j < 3; ++j) v.push_back(poly.vertex(j));
  for (int j = 3; j < n + 4; ++j) {
    const Vec<S> w = poly.vertex(j);
    const S det = det4(v[j - 3], v[j - 2], v[j - 1], w);
    if (ScalarTraits<S>::is_zero(det, 1.0))
      throw Error(ErrorKind::DegenerateInput, "vanishing consecutive determinant", j - 3);
    v.push_back(w / det);
  }
  QuasiAbc<S> out;
  for (int j = 0; j < 4; ++j) out.t[j] = vector_ratio<S>(v[j + n], poly.monodromy() * v[j]);
  for (int j = 0; j < n; ++j) {
    const Vec<S> c = solve(stack_cols(std::vector<Vec<S>>{v[j], v[j + 1], v[j + 2], v[j + 3]}), v[j + 4]);
    out.abc.a.push_back(c(3));
    out.abc.b.push_back(c(2));
    out.abc.c.push_back(c(1));
  }
  return out;
}

template <class S>
QuasiAbc<S> apply_gauge(const QuasiAbc<S>& q, const std::array<S, 4>& k) {
  const int n = q.abc.size();
  QuasiAbc<S> out = q;
  for (int j = 0; j < n; ++j) {
    const S& kj = k[j % 4];
    out.abc.a[j] = q.abc.a[j] * kj / k[(j + 3) % 4];
    out.abc.b[j] = q.abc.b[j] * kj / k[(j + 2) % 4];
    out.abc.c[j] = q.abc.c[j] * kj / k[(j + 1) % 4];
  }
  for (int j = 0; j < 4; ++j) out.t[j] = q.t[j] * k[(j + n) % 4] / k[j];
  return out;
}

template <class S>
QuasiNormalForm<S> quasiperiodic_normalize(const QuasiAbc<S>& q) {
  const int n = q.abc.size();
  const auto& t = q.t;
  if (n % 2 == 1) {
    // Solve t_j k_{j+n} / k_j = 1 with k_0 = 1; only ratios of k enter (a, b, c).
    std::array<S, 4> k;
    k[0] = S(1);
    if (n % 4 == 1) {
      for (int j = 0; j < 3; ++j) k[j + 1] = k[j] / t[j];
    } else {
      k[3] = k[0] / t[0];
      k[2] = k[3] / t[3];
      k[1] = k[2] / t[2];
    }
    return {apply_gauge(q, k), QuasiData<S>{}};
  }
  QuasiData<S> data{t[0] / t[3], t[0] / t[2], t[0] / t[1], n % 4 == 0};
  return {q, data};
}

template <class S>
Xyz3<S> xyz_from_abc(const QuasiAbc<S>& q) {
  const int n = q.abc.size();
  Xyz3<S> out;
  for (int j = 0; j < n; ++j) {
    const auto [a0, b0, c0] = q.at(j);
    const auto [a1, b1, c1] = q.at(j + 1);
    out.x.push_back(divide(b1, a0 * a1, ErrorKind::DivisionByZero, "a_j a_{j+1}", j));
    out.y.push_back(divide(a0, b1 * c0, ErrorKind::DivisionByZero, "b_{j+1} c_j", j));
    out.z.push_back(divide(c1, a1 * b0, ErrorKind::DivisionByZero, "a_{j+1} b_j", j));
  }
  return out;
}

template <class S>
Xyz3<S> xyz_from_abc(const Abc3<S>& abc) {
  return xyz_from_abc(QuasiAbc<S>{abc, {S(1), S(1), S(1), S(1)}});
}

template <class S>
Xyz3<S> xyz_geometric(const TwistedPolygon<S>& poly) {
  require_3d(poly);
  const int n = poly.size();
  Xyz3<S> out;
  for (long i = 0; i < n; ++i) {
    std::map<int, Vec<S>> cache;
    auto V = [&](int k) -> const Vec<S>& {
      auto it = cache.find(k);
      if (it == cache.end()) it = cache.emplace(k, poly.vertex(i + k)).first;
      return it->second;
    };
    // Line (V_j1, V_j2) met with the plane through V_m1, V_m2, V_m3.
    auto phi = [&](int j1, int j2, int m1, int m2, int m3) {
      const Vec<S> plane = cross(std::vector<Vec<S>>{V(m1), V(m2), V(m3)});
      const Vec<S> p = plane.dot(V(j2)) * V(j1) - plane.dot(V(j1)) * V(j2);
      if (max_abs(p) == 0.0) throw Error(ErrorKind::DegenerateIntersection, "line lies in plane", i);
      return ProjPoint<S>{p};
    };
    auto pt = [&](int k) { return ProjPoint<S>{V(k)}; };
    out.x.push_back(-cross_ratio(pt(4), pt(5), phi(4, 5, 0, 1, 2), phi(4, 5, 1, 2, 3)));
    out.y.push_back(-cross_ratio(pt(0), pt(1), phi(0, 1, 2, 3, 4), phi(0, 1, 2, 4, 5)));
    out.z.push_back(-cross_ratio(pt(4), pt(5), phi(4, 5, 0, 1, 3), phi(4, 5, 1, 2, 3)));
  }
  return out;
}

template <class S>
Xyz3<S> explicit_step(const Xyz3<S>& xyz) {
  const long n = xyz.size();
  auto x = [&](long i) -> const S& { return xyz.x[positive_mod(i, n)]; };
  auto y = [&](long i) -> const S& { return xyz.y[positive_mod(i, n)]; };
  auto z = [&](long i) -> const S& { return xyz.z[positive_mod(i, n)]; };
  auto div = [](const S& num, const S& den, const char* what, long i) {
    return divide(num, den, ErrorKind::SingularStep, what, i);
  };
  Xyz3<S> out;
  for (long i = 0; i < n; ++i) {
    const S one(1);
    const S e = one + y(i - 1) + z(i + 2) + y(i - 1) * z(i + 2) - y(i + 1) * z(i);
    const S f_m1 = one + y(i - 1) + z(i);
    const S f_0 = one + y(i) + z(i + 1);
    const S f_p1 = one + y(i + 1) + z(i + 2);
    const S f_m2 = one + y(i - 2) + z(i - 1);
    const S g = one + y(i - 2) + z(i + 1) - y(i) * z(i - 1) + y(i - 2) * z(i + 1);
    if (ScalarTraits<S>::is_zero(e, 1.0))
      throw Error(ErrorKind::SingularStep, "vanishing 1+y[i-1]+z[i+2]+y[i-1]z[i+2]-y[i+1]z[i]", i);
    out.x.push_back(div(x(i + 1) * e, f_m1, "1+y[i-1]+z[i]", i));
    const S ratio = div(x(i - 1) * y(i - 1) * z(i), x(i) * z(i - 1), "x[i]z[i-1]", i);
    out.y.push_back(div(ratio * f_p1 * f_m2, f_0 * e, "1+y[i]+z[i+1]", i));
    const S zr = div(x(i + 1) * z(i), x(i), "x[i]", i);
    out.z.push_back(div(zr * f_p1 * f_m2, f_m1 * g, "1+y[i-2]+z[i+1]-y[i]z[i-1]+y[i-2]z[i+1]", i));
  }
  return out;
}

template <class S>
std::vector<S> quasi_invariants_from_xyz(const Xyz3<S>& xyz) {
  const long n = xyz.size();
  if (n % 2 != 0) throw Error(ErrorKind::ConfigError, "quasiperiodic invariants need even n");
  auto x = [&](long i) -> const S& { return xyz.x[positive_mod(i, n)]; };
  auto y = [&](long i) -> const S& { return xyz.y[positive_mod(i, n)]; };
  auto z = [&](long i) -> const S& { return xyz.z[positive_mod(i, n)]; };
  auto div = [](const S& num, const S& den, long i) {
    return divide(num, den, ErrorKind::DivisionByZero, "coordinate product", i);
  };
  if (n % 4 == 2) {
    S prod(1);
    for (long j = 0; j <= n - 2; j += 2)
      prod *= div(x(j) * x(j) * y(j) * z(j + 1), x(j + 1) * x(j + 1) * y(j + 1) * z(j), j);
    return {prod};
  }
  S alpha(1), beta(1), ratio(1);
  for (long j = 0; j < n; j += 4) {
    alpha *= div(x(j) * x(j + 2) * y(j + 2) * z(j + 1), x(j + 1) * x(j + 3) * y(j + 3) * z(j + 2), j);
    beta *= div(y(j + 1) * z(j), y(j + 3) * z(j + 2), j);
    ratio *= div(y(j) * z(j + 3), y(j + 2) * z(j + 1), j);
  }
  return {alpha, beta, ratio};
}

template <class S>
Xyz3<S> scale_xyz(const Xyz3<S>& xyz, const S& s) {
  Xyz3<S> out = xyz;
  for (auto& v : out.x) v /= s * s;
  return out;
}

template <class S>
Xy2<S> xy2_from_polygon(const TwistedPolygon<S>& poly) {
  if (poly.dim() != 2) throw Error(ErrorKind::ConfigError, "2D coordinates need d = 2");
  const long n = poly.size();
  auto v = [&](long k) { return poly.vertex(k); };
  auto line = [](const Vec<S>& a, const Vec<S>& b) { return cross(std::vector<Vec<S>>{a, b}); };
  auto meet = [&](long a, long b, long c, long d) {
    return ProjPoint<S>{cross(std::vector<Vec<S>>{line(v(a), v(b)), line(v(c), v(d))})};
  };
  auto pt = [&](long k) { return ProjPoint<S>{v(k)}; };
  Xy2<S> out;
  for (long i = 0; i < n; ++i) {
    out.x.push_back(cross_ratio(pt(i - 2), pt(i - 1), meet(i - 2, i - 1, i, i + 1), meet(i - 2, i - 1, i + 1, i + 2)));
    out.y.push_back(cross_ratio(meet(i - 2, i - 1, i + 1, i + 2), meet(i - 1, i, i + 1, i + 2), pt(i + 1), pt(i + 2)));
  }
  return out;
}

template <class S>
Xy2<S> xy2_step(const Xy2<S>& xy) {
  const long n = xy.size();
  auto x = [&](long i) -> const S& { return xy.x[positive_mod(i, n)]; };
  auto y = [&](long i) -> const S& { return xy.y[positive_mod(i, n)]; };
  Xy2<S> out;
  for (long i = 0; i < n; ++i) {
    const S one(1);
    out.x.push_back(divide(x(i) * (one - x(i - 1) * y(i - 1)), one - x(i + 1) * y(i + 1), ErrorKind::SingularStep,
                           "1-x[i+1]y[i+1]", i));
    out.y.push_back(divide(y(i + 1) * (one - x(i + 2) * y(i + 2)), one - x(i) * y(i), ErrorKind::SingularStep,
                           "1-x[i]y[i]", i));
  }
  return out;
}

template <class S>
Abc3<S> alpha_abc(const Abc3<S>& abc) {
  const long n = abc.size();
  Abc3<S> out;
  for (long i = 0; i < n; ++i) {
    out.a.push_back(abc.c[positive_mod(i + 1, n)]);
    out.b.push_back(abc.b[i]);
    out.c.push_back(abc.a[positive_mod(i - 1, n)]);
  }
  return out;
}

template <class S>
Abc3<S> beta_abc(const Abc3<S>& abc) {
  const long n = abc.size();
  if (n % 2 == 0) throw Error(ErrorKind::ConfigError, "beta in (a, b, c) coordinates needs odd n");
  auto a = [&](long i) -> const S& { return abc.a[positive_mod(i, n)]; };
  auto b = [&](long i) -> const S& { return abc.b[positive_mod(i, n)]; };
  auto c = [&](long i) -> const S& { return abc.c[positive_mod(i, n)]; };
  auto quad = [&](long i) {
    const S q = a(i - 2) * a(i) + a(i) * b(i - 1) * c(i - 2) + c(i - 2) * c(i);
    if (ScalarTraits<S>::is_zero(q, 1.0))
      throw Error(ErrorKind::SingularStep, "vanishing a[i-2]a[i]+a[i]b[i-1]c[i-2]+c[i-2]c[i]", i);
    return q;
  };
  // r_i = lambda_i lambda_{i+1} lambda_{i+2} lambda_{i+3}; rho_j = lambda_j / lambda_0.
  std::vector<S> r(n), rho(n, S(0));
  for (long i = 0; i < n; ++i) r[i] = S(1) / (quad(i) * quad(i + 1));
  rho[0] = S(1);
  for (long step = 1, j = 0; step < n; ++step) {
    const S val = rho[j] * r[(j + 1) % n] / r[j];
    j = (j + 4) % n;
    rho[j] = val;
  }
  const S lambda0_4 = r[0] / (rho[0] * rho[1 % n] * rho[2 % n] * rho[3 % n]);
  auto L = [&](long i) -> const S& { return rho[positive_mod(i, n)]; };
  Abc3<S> out;
  for (long i = 0; i < n; ++i) {
    const S q2 = quad(i + 2);
    out.a.push_back(c(i - 1) * q2 * q2 * L(i + 1) * L(i + 2) * L(i + 4) * L(i + 4) * lambda0_4);
    const S mid = (a(i - 2) + b(i - 1) * c(i - 2)) * (c(i + 2) + a(i + 2) * b(i + 1)) - a(i + 2) * c(i - 2);
    out.b.push_back(mid * quad(i + 1) * L(i) * L(i + 1) * L(i + 3) * L(i + 4) * lambda0_4);
    out.c.push_back(a(i + 1) * q2 * q2 * L(i + 2) * L(i + 3) * L(i + 4) * L(i + 4) * lambda0_4);
  }
  return out;
}

#define PENTAGRAM_INSTANTIATE(S)                                                       \
  template struct QuasiAbc<S>;                                                         \
  template Abc3<S> abc_from_coeffs<S>(const CoeffSeq<S>&);                             \
  template CoeffSeq<S> coeffs_from_abc<S>(const Abc3<S>&);                             \
  template Abc3<S> abc_from_polygon<S>(const TwistedPolygon<S>&, const Tolerance&);    \
  template QuasiAbc<S> quasi_abc_from_polygon<S>(const TwistedPolygon<S>&);            \
  template QuasiAbc<S> apply_gauge<S>(const QuasiAbc<S>&, const std::array<S, 4>&);    \
  template QuasiNormalForm<S> quasiperiodic_normalize<S>(const QuasiAbc<S>&);          \
  template Xyz3<S> xyz_from_abc<S>(const Abc3<S>&);                                    \
  template Xyz3<S> xyz_from_abc<S>(const QuasiAbc<S>&);                                \
  template Xyz3<S> xyz_geometric<S>(const TwistedPolygon<S>&);                         \
  template Xyz3<S> explicit_step<S>(const Xyz3<S>&);                                   \
  template std::vector<S> quasi_invariants_from_xyz<S>(const Xyz3<S>&);                \
  template Xyz3<S> scale_xyz<S>(const Xyz3<S>&, const S&);                             \
  template Xy2<S> xy2_from_polygon<S>(const TwistedPolygon<S>&);                       \
  template Xy2<S> xy2_step<S>(const Xy2<S>&);                                          \
  template Abc3<S> alpha_abc<S>(const Abc3<S>&);                                       \
  template Abc3<S> beta_abc<S>(const Abc3<S>&);

PENTAGRAM_INSTANTIATE(Rational)
PENTAGRAM_INSTANTIATE(double)

}  // namespace pentagram
