#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pentagram/coordinates.hpp"
#include "pentagram/maps.hpp"
#include "pentagram/random.hpp"

using namespace pentagram;
using Q = Rational;

TEST_CASE("centered short-diagonal plane passes through v_{k-2}, v_k, v_{k+2}") {
  RandomSource rng(31);
  const auto poly = rng.twisted_polygon(3, 7);
  for (long k = 0; k < 7; ++k) {
    const auto h = p_diagonal(poly, k - 2, 2);
    for (long j : {k - 2, k, k + 2}) CHECK(h.covector.dot(poly.vertex(j)) == Q(0));
  }
}

TEST_CASE("2D stride-one diagonal is a side") {
  RandomSource rng(32);
  const auto poly = rng.twisted_polygon(2, 5);
  for (long k = 0; k < 5; ++k) {
    const auto h = p_diagonal(poly, k, 1);
    CHECK(h.covector.dot(poly.vertex(k)) == Q(0));
    CHECK(h.covector.dot(poly.vertex(k + 1)) == Q(0));
  }
}

TEST_CASE("diagonals that wrap use the monodromy") {
  RandomSource rng(33);
  const auto poly = rng.twisted_polygon(3, 7);
  const auto h = p_diagonal(poly, 5, 2);
  CHECK(h.covector.dot(poly.vertex(7)) == Q(0));
  CHECK(h.covector.dot(poly.monodromy() * poly.vertex(2)) == Q(0));
  const auto back = p_diagonal(poly, -3, 2);
  CHECK(back.covector.dot(poly.monodromy_inverse() * poly.vertex(4)) == Q(0));
}

TEST_CASE("the centered map in dimension one is the identity") {
  RandomSource rng(34);
  const auto poly = rng.twisted_polygon(1, 5);
  const auto image = general_map(poly, pentagram_map);
  for (long k = 0; k < 5; ++k) CHECK(projectively_equal(image.vertex(k), poly.vertex(k)));
}

TEST_CASE("T_{p,p} is an index shift") {
  RandomSource rng(35);
  for (int d : {2, 3}) {
    const auto poly = rng.twisted_polygon(d, 7);
    for (int p : {1, 2, 3}) {
      const auto m = best_shift(general_map(poly, MapParams{p, p, false}), poly);
      CHECK(m.defect == Q(0));
    }
  }
}

TEST_CASE("2D map fixes the regular pentagon up to projective equivalence") {
  std::vector<Vec<double>> vs;
  for (int k = 0; k < 5; ++k) {
    Vec<double> v(3);
    const double t = 2.0 * std::numbers::pi * k / 5.0;
    v << std::cos(t), std::sin(t), 1.0;
    vs.push_back(v);
  }
  const TwistedPolygon<double> poly(vs, Mat<double>::Identity(3, 3));
  const auto before = xy2_from_polygon(poly);
  const auto after = xy2_from_polygon(general_map(poly, pentagram_map));
  for (int i = 0; i < 5; ++i) {
    CHECK(after.x[i] == doctest::Approx(before.x[i]).epsilon(1e-12));
    CHECK(after.y[i] == doctest::Approx(before.y[i]).epsilon(1e-12));
  }
}

TEST_CASE("alpha_p squared is an index shift") {
  RandomSource rng(36);
  for (int d : {2, 3}) {
    for (int p : {1, 2, 3}) {
      const auto poly = rng.twisted_polygon(d, 7);
      const auto twice = alpha_map(alpha_map(poly, p), p);
      const auto m = best_shift(twice, poly);
      CHECK(m.defect == Q(0));
      CHECK(m.shift == (d - 1) * p);
    }
  }
}

TEST_CASE("alpha followed by beta is the pentagram map in 3D") {
  RandomSource rng(37);
  for (int n : {7, 8}) {
    const auto poly = rng.twisted_polygon(3, n);
    const auto composed = alpha_map(alpha_map(poly, 2, true), 1, true);
    const auto direct = general_map(poly, pentagram_map);
    for (long k = 0; k < n; ++k) CHECK(projectively_equal(composed.vertex(k), direct.vertex(k)));
  }
}

TEST_CASE("duality: T_{r,p} inverts T_{p,r} up to a fixed shift") {
  const std::vector<std::array<int, 3>> cases{{2, 1, 2}, {2, 2, 1}, {3, 2, 1}, {3, 1, 2}, {3, 3, 1}, {3, 3, 3}};
  for (const auto& [d, p, r] : cases) {
    long shift = -1;
    for (std::uint64_t seed = 40; seed < 43; ++seed) {
      RandomSource rng(seed);
      const auto poly = rng.twisted_polygon(d, 7);
      const auto m = duality_defect(poly, p, r);
      CHECK(m.defect == Q(0));
      if (shift >= 0) CHECK(m.shift == shift);
      shift = m.shift;
    }
    CHECK(shift == (d - 1) * (p + r));
  }
}

TEST_CASE("duality in floating point") {
  RandomSource rng(44);
  const auto poly = to_backend<double>(rng.twisted_polygon(3, 7));
  CHECK(duality_defect(poly, 2, 1).defect < 1e-12);
}

TEST_CASE("the map commutes with projective transformations") {
  RandomSource rng(45);
  for (int d : {2, 3, 4}) {
    const auto poly = rng.twisted_polygon(d, 7);
    const Mat<Q> g = rng.sl_matrix(d + 1);
    const auto lhs = coefficients(general_map(poly.transformed(g), pentagram_map));
    const auto rhs = coefficients(general_map(poly, pentagram_map));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("image keeps the monodromy") {
  RandomSource rng(46);
  const auto poly = rng.twisted_polygon(3, 7);
  const auto image = general_map(poly, pentagram_map);
  CHECK(image.monodromy() == poly.monodromy());
  for (long k = 0; k < 7; ++k) {
    const auto direct = intersect(std::vector<Hyperplane<Q>>{p_diagonal(poly, k + 7 - 3, 2), p_diagonal(poly, k + 7 - 2, 2),
                                                             p_diagonal(poly, k + 7 - 1, 2)});
    CHECK(projectively_equal(direct.coords, image.vertex(k + 7)));
  }
}
