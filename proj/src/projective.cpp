#include "pentagram/projective.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pentagram/error.hpp"

namespace pentagram {

long positive_mod(long k, long n) {
  const long r = k % n;
  return r < 0 ? r + n : r;
}

template <class S>
S projective_distance(const Vec<S>& u, const Vec<S>& v) {
  const S uv = u.dot(v);
  const S uu = u.dot(u);
  const S vv = v.dot(v);
  if (ScalarTraits<S>::is_zero(uu) || ScalarTraits<S>::is_zero(vv))
    throw Error(ErrorKind::DegenerateInput, "projective distance of a zero vector");
  return S(1) - uv * uv / (uu * vv);
}

template <class S>
bool projectively_equal(const Vec<S>& u, const Vec<S>& v, const Tolerance& tol) {
  const S dist = projective_distance(u, v);
  if constexpr (is_exact_v<S>) {
    return dist.is_zero();
  } else {
    return std::abs(dist) <= tol.rel;
  }
}

namespace {

template <class S>
bool det_is_one(const Mat<S>& m, const Tolerance& tol) {
  const S det = determinant(m);
  if constexpr (is_exact_v<S>) {
    return det == S(1);
  } else {
    return std::abs(det - S(1)) <= tol.rel * std::max<S>(S(1), std::pow(S(max_abs(m)), S(m.rows())));
  }
}

}  // namespace

template <class S>
TwistedPolygon<S>::TwistedPolygon(std::vector<Vec<S>> vertices, Mat<S> monodromy)
    : d_(static_cast<int>(monodromy.rows()) - 1),
      n_(static_cast<int>(vertices.size())),
      vertices_(std::move(vertices)),
      monodromy_(std::move(monodromy)) {
  if (n_ < 1) throw Error(ErrorKind::ConfigError, "polygon needs at least one vertex");
  if (d_ < 1 || monodromy_.cols() != d_ + 1)
    throw Error(ErrorKind::ConfigError, "monodromy must be square of size d+1 >= 2");
  for (int k = 0; k < n_; ++k) {
    if (vertices_[k].size() != d_ + 1)
      throw Error(ErrorKind::ConfigError, "vertex has wrong number of coordinates", k);
    if (max_abs(vertices_[k]) == 0.0)
      throw Error(ErrorKind::DegenerateInput, "zero vertex", k);
  }
  if (!det_is_one(monodromy_, Tolerance{}))
    throw Error(ErrorKind::ConfigError, "monodromy must have determinant 1");
  monodromy_inv_ = inverse(monodromy_);
}

template <class S>
Vec<S> TwistedPolygon<S>::vertex(long k) const {
  const long r = positive_mod(k, n_);
  long q = (k - r) / n_;
  Vec<S> v = vertices_[r];
  for (; q > 0; --q) v = monodromy_ * v;
  for (; q < 0; ++q) v = monodromy_inv_ * v;
  return v;
}

template <class S>
TwistedPolygon<S> TwistedPolygon<S>::shifted(long s) const {
  std::vector<Vec<S>> vs;
  vs.reserve(n_);
  for (int k = 0; k < n_; ++k) vs.push_back(vertex(k + s));
  return TwistedPolygon(std::move(vs), monodromy_);
}

template <class S>
TwistedPolygon<S> TwistedPolygon<S>::transformed(const Mat<S>& g) const {
  std::vector<Vec<S>> vs;
  vs.reserve(n_);
  for (const auto& v : vertices_) vs.push_back(g * v);
  return TwistedPolygon(std::move(vs), g * monodromy_ * inverse(g));
}

template <class S>
S CoeffSeq<S>::operator()(long j, int k) const {
  return a(positive_mod(j, n), k - 1);
}

template <class S>
Vec<S> LiftedPolygon<S>::vector(long k) const {
  const long r = positive_mod(k, n);
  long q = (k - r) / n;
  Vec<S> v = vectors[r];
  const Mat<S> step = S(twist) * monodromy;
  for (; q > 0; --q) v = step * v;
  if (q < 0) {
    const Mat<S> back = inverse(step);
    for (; q < 0; ++q) v = back * v;
  }
  return v;
}

template <class S>
S LiftedPolygon<S>::normalized_det(long j) const {
  std::vector<Vec<S>> cols;
  for (int i = 0; i <= d; ++i) cols.push_back(vector(j + i));
  return kappa * determinant(stack_cols(cols));
}

template <class S>
TwistedPolygon<S> LiftedPolygon<S>::polygon() const {
  return TwistedPolygon<S>(vectors, monodromy);
}

namespace {

template <class S>
S consecutive_det(const TwistedPolygon<S>& poly, long j) {
  std::vector<Vec<S>> cols;
  for (int i = 0; i <= poly.dim(); ++i) cols.push_back(poly.vertex(j + i));
  return determinant(stack_cols(cols));
}

}  // namespace

template <class S>
LiftedPolygon<S> lift_polygon(const TwistedPolygon<S>& poly, const Tolerance& tol, int twist) {
  const int d = poly.dim();
  const int n = poly.size();
  if (std::gcd(n, d + 1) != 1)
    throw Error(ErrorKind::GcdObstruction,
                "gcd(n, d+1) = " + std::to_string(std::gcd(n, d + 1)) + " for n=" + std::to_string(n) +
                    ", d=" + std::to_string(d));
  if (twist != 1 && twist != -1) throw Error(ErrorKind::ConfigError, "twist must be +1 or -1");
  if (twist == -1 && (d + 1) % 2 != 0)
    throw Error(ErrorKind::ConfigError, "a sign-twisted lift needs even d+1");

  std::vector<S> dets(n);
  for (int j = 0; j < n; ++j) {
    dets[j] = consecutive_det(poly, j);
    double scale = 1.0;
    for (int i = 0; i <= d; ++i) scale *= max_abs(poly.vertex(j + i));
    if (ScalarTraits<S>::is_zero(dets[j], scale))
      throw Error(ErrorKind::DegenerateInput, "consecutive vertices are linearly dependent", j);
  }

  // Scale factors s_j with V_j = s_j v_j: s_{j+d+1} = s_j D_j / D_{j+1} and
  // s_{j+n} = twist * s_j. gcd(n, d+1) = 1 makes the walk visit every residue.
  // W_0 is v_0 scaled to have first nonzero coordinate 1, which makes the
  // pair (W, kappa) canonical.
  std::vector<S> rho(n, S(0));
  {
    const Vec<S>& v0 = poly.vertices()[0];
    const double scale = max_abs(v0);
    Eigen::Index i = 0;
    while (ScalarTraits<S>::is_zero(v0(i), scale)) ++i;
    rho[0] = S(1) / v0(i);
  }
  long j = 0;
  for (int step = 1; step < n; ++step) {
    const long next = j + d + 1;
    S val = rho[j] * dets[j] / dets[(j + 1) % n];
    const long r = positive_mod(next, n);
    if (((next - r) / n) % 2 != 0) val = twist == 1 ? val : S(-val);
    rho[r] = val;
    j = r;
  }

  LiftedPolygon<S> lift;
  lift.d = d;
  lift.n = n;
  lift.monodromy = poly.monodromy();
  lift.twist = twist;
  lift.vectors.reserve(n);
  for (int k = 0; k < n; ++k) lift.vectors.push_back(rho[k] * poly.vertices()[k]);
  {
    std::vector<Vec<S>> cols;
    for (int i = 0; i <= d; ++i) cols.push_back(lift.vector(i));
    lift.kappa = S(1) / determinant(stack_cols(cols));
  }

  if (auto c = ScalarTraits<S>::root(lift.kappa, static_cast<unsigned>(d + 1))) {
    // For even d+1 the root is taken positive, which keeps the first nonzero
    // coordinate of V_0 positive.
    for (auto& v : lift.vectors) v *= *c;
    lift.kappa = S(1);
  }
  lift.coeffs = coefficients_from_lift(lift, tol);
  return lift;
}

template <class S>
CoeffSeq<S> coefficients_from_lift(const LiftedPolygon<S>& lift, const Tolerance& tol) {
  const int d = lift.d;
  CoeffSeq<S> out{d, lift.n, Mat<S>(lift.n, d)};
  const S expected = (d % 2 == 0) ? S(1) : S(-1);
  std::vector<Vec<S>> window;
  for (int i = 0; i <= d + 1; ++i) window.push_back(lift.vector(i));
  for (int j = 0; j < lift.n; ++j) {
    std::vector<Vec<S>> basis(window.begin(), window.begin() + d + 1);
    const Vec<S> c = solve(stack_cols(basis), window[d + 1]);
    bool ok;
    if constexpr (is_exact_v<S>) {
      ok = c(0) == expected;
    } else {
      ok = std::abs(c(0) - expected) <= tol.rel * std::max<S>(S(1), S(max_abs(c)));
    }
    if (!ok)
      throw Error(ErrorKind::InconsistentLift,
                  "coefficient of V_j is " + ScalarTraits<S>::to_string(c(0)) + ", expected (-1)^d", j);
    for (int k = 1; k <= d; ++k) out.a(j, k - 1) = c(k);
    window.erase(window.begin());
    window.push_back(lift.vector(j + d + 2));
  }
  return out;
}

template <class S>
LiftedPolygon<S> reconstruct_from_coeffs(const CoeffSeq<S>& coeffs, const Tolerance& tol) {
  const int d = coeffs.d;
  const int n = coeffs.n;
  if (coeffs.a.rows() != n || coeffs.a.cols() != d)
    throw Error(ErrorKind::ConfigError, "coefficient array must be n x d");
  const S sign = (d % 2 == 0) ? S(1) : S(-1);
  std::vector<Vec<S>> vs;
  for (int i = 0; i <= d; ++i) vs.push_back(Vec<S>::Unit(d + 1, i));
  for (int j = 0; j < n; ++j) {
    Vec<S> next = sign * vs[j];
    for (int k = 1; k <= d; ++k) next += coeffs.a(j, k - 1) * vs[j + k];
    vs.push_back(std::move(next));
  }
  LiftedPolygon<S> lift;
  lift.d = d;
  lift.n = n;
  lift.monodromy = stack_cols(std::vector<Vec<S>>(vs.begin() + n, vs.begin() + n + d + 1));
  lift.vectors.assign(vs.begin(), vs.begin() + n);
  lift.coeffs = coeffs;
  if constexpr (!is_exact_v<S>) {
    for (int j = 0; j < n; ++j)
      if (std::abs(lift.normalized_det(j) - S(1)) > tol.rel * S(1e3))
        throw Error(ErrorKind::DegenerateOutput, "reconstructed lift lost unit determinants", j);
  }
  return lift;
}

template <class S>
CoeffSeq<S> coefficients(const TwistedPolygon<S>& poly, const Tolerance& tol) {
  return lift_polygon(poly, tol).coeffs;
}

template <class S>
Hyperplane<S> hyperplane_span(const std::vector<ProjPoint<S>>& points) {
  std::vector<Vec<S>> vs;
  for (const auto& p : points) vs.push_back(p.coords);
  if (rank(stack_rows(vs)) < static_cast<Eigen::Index>(vs.size()))
    throw Error(ErrorKind::DegenerateSpan, "points do not span a hyperplane");
  return {cross(vs)};
}

template <class S>
ProjPoint<S> intersect(const std::vector<Hyperplane<S>>& planes) {
  std::vector<Vec<S>> vs;
  for (const auto& h : planes) vs.push_back(h.covector);
  if (rank(stack_rows(vs)) < static_cast<Eigen::Index>(vs.size()))
    throw Error(ErrorKind::DegenerateIntersection, "hyperplanes do not meet in a single point");
  return {cross(vs)};
}

template <class S>
S cross_ratio(const ProjPoint<S>& p1, const ProjPoint<S>& p2, const ProjPoint<S>& p3, const ProjPoint<S>& p4,
              const Tolerance& tol) {
  const Vec<S>& a = p1.coords;
  const Vec<S>& b = p2.coords;
  const Eigen::Index dim = a.size();
  Eigen::Index r0 = -1, r1 = -1;
  S best = S(0);
  for (Eigen::Index r = 0; r < dim && !(is_exact_v<S> && r0 >= 0); ++r)
    for (Eigen::Index s = r + 1; s < dim; ++s) {
      const S m = a(r) * b(s) - a(s) * b(r);
      if (ScalarTraits<S>::abs(m) > ScalarTraits<S>::abs(best)) {
        best = m;
        r0 = r;
        r1 = s;
        if constexpr (is_exact_v<S>) break;
      }
    }
  const double scale = max_abs(a) * max_abs(b);
  if (r0 < 0 || ScalarTraits<S>::is_zero(best, scale))
    throw Error(ErrorKind::CoincidentPoints, "first two points coincide");

  auto decompose = [&](const Vec<S>& c) {
    const S l1 = (c(r0) * b(r1) - c(r1) * b(r0)) / best;
    const S l2 = (a(r0) * c(r1) - a(r1) * c(r0)) / best;
    const Vec<S> res = c - l1 * a - l2 * b;
    bool collinear;
    if constexpr (is_exact_v<S>) {
      collinear = res.isZero();
    } else {
      collinear = max_abs(res) <= tol.rel * max_abs(c);
    }
    if (!collinear) throw Error(ErrorKind::NotCollinear, "points are not on one projective line");
    return std::pair<S, S>{l1, l2};
  };
  const auto [l1, l2] = decompose(p3.coords);
  const auto [m1, m2] = decompose(p4.coords);
  const S num = l2 * m1 - l1 * m2;
  const S den = l2 * m1;
  const double s3 = std::max(std::abs(ScalarTraits<S>::to_double(l1)), std::abs(ScalarTraits<S>::to_double(l2)));
  const double s4 = std::max(std::abs(ScalarTraits<S>::to_double(m1)), std::abs(ScalarTraits<S>::to_double(m2)));
  if (ScalarTraits<S>::is_zero(l1, s3) || ScalarTraits<S>::is_zero(l2, s3) || ScalarTraits<S>::is_zero(m1, s4) ||
      ScalarTraits<S>::is_zero(m2, s4) || ScalarTraits<S>::is_zero(num, s3 * s4))
    throw Error(ErrorKind::CoincidentPoints, "cross-ratio points are not pairwise distinct");
  return num / den;
}

#define PENTAGRAM_INSTANTIATE(S)                                                                              \
  template S projective_distance<S>(const Vec<S>&, const Vec<S>&);                                           \
  template bool projectively_equal<S>(const Vec<S>&, const Vec<S>&, const Tolerance&);                       \
  template class TwistedPolygon<S>;                                                                          \
  template struct CoeffSeq<S>;                                                                               \
  template struct LiftedPolygon<S>;                                                                          \
  template LiftedPolygon<S> lift_polygon<S>(const TwistedPolygon<S>&, const Tolerance&, int);                 \
  template CoeffSeq<S> coefficients_from_lift<S>(const LiftedPolygon<S>&, const Tolerance&);                 \
  template LiftedPolygon<S> reconstruct_from_coeffs<S>(const CoeffSeq<S>&, const Tolerance&);                \
  template CoeffSeq<S> coefficients<S>(const TwistedPolygon<S>&, const Tolerance&);                          \
  template Hyperplane<S> hyperplane_span<S>(const std::vector<ProjPoint<S>>&);                              \
  template ProjPoint<S> intersect<S>(const std::vector<Hyperplane<S>>&);                                    \
  template S cross_ratio<S>(const ProjPoint<S>&, const ProjPoint<S>&, const ProjPoint<S>&, const ProjPoint<S>&, \
                            const Tolerance&);

PENTAGRAM_INSTANTIATE(Rational)
PENTAGRAM_INSTANTIATE(double)

}  // namespace pentagram
