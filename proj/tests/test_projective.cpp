#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pentagram/error.hpp"
#include "pentagram/projective.hpp"
#include "pentagram/random.hpp"

using namespace pentagram;
using Q = Rational;

namespace {

Vec<Q> vec(std::initializer_list<Q> xs) {
  Vec<Q> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

CoeffSeq<Q> constant_coeffs(int d, int n, std::vector<Q> row) {
  CoeffSeq<Q> c{d, n, Mat<Q>(n, d)};
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < d; ++k) c.a(j, k) = row[k];
  return c;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ConfigError;
}

}  // namespace

TEST_CASE("lift has unit consecutive determinants, closed 3D heptagon") {
  RandomSource rng(11);
  const auto poly = rng.closed_polygon(3, 7);
  const auto lift = lift_polygon(poly);
  for (int j = 0; j < 7; ++j) CHECK(lift.normalized_det(j) == Q(1));
  for (int j = 0; j < 7; ++j) CHECK(lift.vector(j + 7) == lift.vector(j));
}

TEST_CASE("lift of a twisted polygon respects the monodromy") {
  RandomSource rng(12);
  for (int d : {2, 3, 4}) {
    const int n = d == 3 ? 9 : 7;
    const auto poly = rng.twisted_polygon(d, n);
    const auto lift = lift_polygon(poly);
    for (int j = 0; j < n; ++j) CHECK(lift.normalized_det(j) == Q(1));
    CHECK(lift.vector(n + 1) == Q(lift.twist) * poly.monodromy() * lift.vector(1));
  }
}

TEST_CASE("gcd obstruction") {
  RandomSource rng(13);
  const auto poly = rng.twisted_polygon(3, 8);
  CHECK(kind_of([&] { lift_polygon(poly); }) == ErrorKind::GcdObstruction);
}

TEST_CASE("degenerate input is reported with its index") {
  std::vector<Vec<Q>> vs;
  for (int k = 0; k < 5; ++k) vs.push_back(vec({Q(1), Q(k), Q(k * k + 1)}));
  vs[3] = vs[2];
  const TwistedPolygon<Q> poly(vs, Mat<Q>::Identity(3, 3));
  try {
    lift_polygon(poly);
    FAIL("expected DegenerateInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateInput);
    CHECK(e.index().has_value());
  }
}

TEST_CASE("regular pentagon lifts in floating point") {
  std::vector<Vec<double>> vs;
  for (int k = 0; k < 5; ++k) {
    Vec<double> v(3);
    const double t = 2.0 * std::numbers::pi * k / 5.0;
    v << std::cos(t), std::sin(t), 1.0;
    vs.push_back(v);
  }
  const TwistedPolygon<double> poly(vs, Mat<double>::Identity(3, 3));
  const auto lift = lift_polygon(poly);
  CHECK(lift.kappa == 1.0);
  for (int j = 0; j < 5; ++j) CHECK(std::abs(lift.normalized_det(j) - 1.0) < 1e-12);
}

TEST_CASE("sign rule: first nonzero coordinate of V_0 is positive") {
  RandomSource rng(14);
  const auto poly = rng.twisted_polygon(3, 7);
  const auto flipped = TwistedPolygon<Q>(
      [&] {
        auto vs = poly.vertices();
        for (auto& v : vs) v *= Q(-3, 2);
        return vs;
      }(),
      poly.monodromy());
  const auto a = lift_polygon(poly);
  const auto b = lift_polygon(flipped);
  CHECK(a.coeffs == b.coeffs);
  CHECK(a.kappa == b.kappa);
  const auto& v0 = b.vectors[0];
  for (Eigen::Index i = 0; i < v0.size(); ++i) {
    if (v0(i).is_zero()) continue;
    CHECK(v0(i) > Q(0));
    break;
  }
}

TEST_CASE("constant coefficients round trip") {
  const auto c = constant_coeffs(3, 7, {Q(3), Q(2), Q(1)});
  const auto lift = reconstruct_from_coeffs(c);
  CHECK(coefficients_from_lift(lift) == c);
  CHECK(coefficients(lift.polygon()) == c);

  const auto ones = constant_coeffs(3, 7, {Q(1), Q(1), Q(1)});
  CHECK(coefficients(reconstruct_from_coeffs(ones).polygon()) == ones);
}

TEST_CASE("coefficient of V_j is (-1)^d") {
  RandomSource rng(15);
  for (int d : {2, 3}) {
    const auto poly = rng.twisted_polygon(d, 7);
    const auto lift = lift_polygon(poly);
    for (int j = 0; j < 7; ++j) {
      std::vector<Vec<Q>> basis;
      for (int i = 0; i <= d; ++i) basis.push_back(lift.vector(j + i));
      const Vec<Q> c = solve(stack_cols(basis), lift.vector(j + d + 1));
      CHECK(c(0) == (d % 2 == 0 ? Q(1) : Q(-1)));
    }
  }
}

TEST_CASE("2D lift recovers V_{j+3} = a_j V_{j+2} + b_j V_{j+1} + V_j") {
  RandomSource rng(16);
  CoeffSeq<Q> c{2, 5, Mat<Q>(5, 2)};
  for (int j = 0; j < 5; ++j) c.a(j, 0) = rng.nonzero_rational(), c.a(j, 1) = rng.nonzero_rational();
  const auto lift = reconstruct_from_coeffs(c);
  for (int j = 0; j < 5; ++j)
    CHECK(lift.vector(j + 3) == c(j, 2) * lift.vector(j + 2) + c(j, 1) * lift.vector(j + 1) + lift.vector(j));
  CHECK(coefficients(lift.polygon()) == c);
}

TEST_CASE("2D constant coefficients give a matrix power monodromy") {
  const Q a(2), b(-1, 3);
  const auto lift = reconstruct_from_coeffs(constant_coeffs(2, 5, {b, a}));
  Mat<Q> step(3, 3);
  step << 0, 0, 1, 1, 0, b, 0, 1, a;
  Mat<Q> power = Mat<Q>::Identity(3, 3);
  for (int i = 0; i < 5; ++i) power = power * step;
  CHECK(lift.monodromy == power);
}

TEST_CASE("closed polygon reconstructs with trivial monodromy") {
  RandomSource rng(17);
  const auto poly = rng.closed_polygon(3, 7);
  const auto lift = reconstruct_from_coeffs(coefficients(poly));
  const Mat<Q> id = Mat<Q>::Identity(4, 4);
  CHECK((lift.monodromy == id || lift.monodromy == Mat<Q>(-id)));
}

TEST_CASE("round trip on random coefficients, d = 2..5") {
  RandomSource rng(18);
  for (int d = 2; d <= 5; ++d) {
    CoeffSeq<Q> c{d, 7, Mat<Q>(7, d)};
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < d; ++k) c.a(j, k) = rng.rational();
    if (d == 5) c.n = 7;
    const auto lift = reconstruct_from_coeffs(c);
    for (int j = 0; j < 7; ++j) CHECK(lift.normalized_det(j) == Q(1));
    if (std::gcd(7, d + 1) == 1) CHECK(coefficients(lift.polygon()) == c);
  }
}

TEST_CASE("coefficients are projective invariants") {
  RandomSource rng(19);
  for (int d : {2, 3, 4}) {
    const auto poly = rng.twisted_polygon(d, 7);
    const Mat<Q> g = rng.sl_matrix(d + 1);
    CHECK(coefficients(poly) == coefficients(poly.transformed(g)));
    auto rescaled = poly.vertices();
    for (auto& v : rescaled) v *= rng.nonzero_rational();
    CHECK(coefficients(poly) == coefficients(TwistedPolygon<Q>(rescaled, poly.monodromy())));
  }
}

TEST_CASE("float lift agrees with the exact one") {
  RandomSource rng(20);
  const auto poly = rng.twisted_polygon(3, 7);
  const auto exact = coefficients(poly);
  const auto approx = coefficients(to_backend<double>(poly));
  for (int j = 0; j < 7; ++j)
    for (int k = 0; k < 3; ++k)
      CHECK(approx.a(j, k) == doctest::Approx(exact.a(j, k).to_double()).epsilon(1e-9));
}

TEST_CASE("hyperplane span of coordinate points") {
  std::vector<ProjPoint<Q>> pts{{vec({1, 0, 0, 0})}, {vec({0, 1, 0, 0})}, {vec({0, 0, 1, 0})}};
  const auto h = hyperplane_span(pts);
  CHECK(projectively_equal(h.covector, vec({0, 0, 0, 1})));
  const auto line = hyperplane_span<Q>({{vec({1, 0, 0})}, {vec({0, 1, 0})}});
  CHECK(projectively_equal(line.covector, vec({0, 0, 1})));
  CHECK(kind_of([&] { hyperplane_span<Q>({{vec({1, 2, 3})}, {vec({2, 4, 6})}}); }) == ErrorKind::DegenerateSpan);
}

TEST_CASE("incidence is exact for random spans and intersections") {
  RandomSource rng(21);
  std::vector<ProjPoint<Q>> pts;
  for (int i = 0; i < 3; ++i) pts.push_back({rng.vector(4)});
  const auto h = hyperplane_span(pts);
  for (const auto& p : pts) CHECK(h.covector.dot(p.coords) == Q(0));
  std::vector<Hyperplane<Q>> planes;
  for (int i = 0; i < 3; ++i) planes.push_back({rng.vector(4)});
  const auto p = intersect(planes);
  for (const auto& pl : planes) CHECK(pl.covector.dot(p.coords) == Q(0));
}

TEST_CASE("intersection of coordinate planes and duality on frames") {
  const auto p = intersect<Q>({{vec({0, 1, 0, 0})}, {vec({0, 0, 1, 0})}, {vec({0, 0, 0, 1})}});
  CHECK(projectively_equal(p.coords, vec({1, 0, 0, 0})));
  for (int i = 0; i < 4; ++i) {
    std::vector<Hyperplane<Q>> planes;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      std::vector<ProjPoint<Q>> pts;
      for (int k = 0; k < 4; ++k)
        if (k != j) pts.push_back({Vec<Q>::Unit(4, k)});
      planes.push_back(hyperplane_span(pts));
    }
    CHECK(projectively_equal(intersect(planes).coords, Vec<Q>(Vec<Q>::Unit(4, i))));
  }
  CHECK(kind_of([&] { intersect<Q>({{vec({1, 0, 0})}, {vec({2, 0, 0})}}); }) == ErrorKind::DegenerateIntersection);
}

TEST_CASE("cross-ratio of affine parameters") {
  auto at = [](Q t) { return ProjPoint<Q>{vec({1, t})}; };
  CHECK(cross_ratio(at(0), at(1), at(2), at(3)) == Q(1, 4));
  const ProjPoint<Q> inf{vec({0, 1})};
  const Q t(5);
  CHECK(cross_ratio(at(0), at(1), inf, at(t)) == Q(1) / (Q(1) - t));
}

TEST_CASE("cross-ratio invariance") {
  RandomSource rng(22);
  const Vec<Q> a = rng.vector(4), b = rng.vector(4);
  std::vector<ProjPoint<Q>> p{{a}, {b}, {a + Q(2) * b}, {Q(-3) * a + Q(5, 7) * b}};
  const Q base = cross_ratio(p[0], p[1], p[2], p[3]);
  auto scaled = p;
  for (auto& x : scaled) x.coords *= rng.nonzero_rational();
  CHECK(cross_ratio(scaled[0], scaled[1], scaled[2], scaled[3]) == base);
  const Mat<Q> g = rng.sl_matrix(4);
  for (auto& x : scaled) x.coords = g * x.coords;
  CHECK(cross_ratio(scaled[0], scaled[1], scaled[2], scaled[3]) == base);
}

TEST_CASE("cross-ratio errors") {
  const ProjPoint<Q> a{vec({1, 0, 0})}, b{vec({0, 1, 0})}, c{vec({1, 1, 0})}, off{vec({0, 0, 1})};
  CHECK(kind_of([&] { cross_ratio(a, b, c, off); }) == ErrorKind::NotCollinear);
  CHECK(kind_of([&] { cross_ratio(a, a, c, b); }) == ErrorKind::CoincidentPoints);
  CHECK(kind_of([&] { cross_ratio(a, b, c, c); }) == ErrorKind::CoincidentPoints);
  CHECK(kind_of([&] { cross_ratio(a, b, a, c); }) == ErrorKind::CoincidentPoints);
}
