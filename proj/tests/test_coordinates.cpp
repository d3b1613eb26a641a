#include <doctest.h>

#include "pentagram/coordinates.hpp"
#include "pentagram/error.hpp"
#include "pentagram/maps.hpp"
#include "pentagram/random.hpp"

using namespace pentagram;
using Q = Rational;

namespace {

Abc3<Q> constant_abc(int n, Q a, Q b, Q c) {
  return {std::vector<Q>(n, a), std::vector<Q>(n, b), std::vector<Q>(n, c)};
}

TwistedPolygon<Q> polygon_from_abc(const Abc3<Q>& abc) { return reconstruct_from_coeffs(coeffs_from_abc(abc)).polygon(); }

template <class S>
Xyz3<S> rotate(const Xyz3<S>& xyz, long s) {
  const long n = xyz.size();
  Xyz3<S> out;
  for (long i = 0; i < n; ++i) {
    out.x.push_back(xyz.x[positive_mod(i + s, n)]);
    out.y.push_back(xyz.y[positive_mod(i + s, n)]);
    out.z.push_back(xyz.z[positive_mod(i + s, n)]);
  }
  return out;
}

}  // namespace

TEST_CASE("abc of a constant-coefficient polygon") {
  const auto abc = constant_abc(7, Q(1), Q(2), Q(3));
  CHECK(abc_from_polygon(polygon_from_abc(abc)) == abc);
}

TEST_CASE("abc round trip and gcd obstruction") {
  RandomSource rng(50);
  for (int n : {5, 7, 9, 11}) {
    const auto poly = rng.twisted_polygon(3, n);
    const auto abc = abc_from_polygon(poly);
    CHECK(abc_from_polygon(polygon_from_abc(abc)) == abc);
    CHECK(abc_from_polygon(poly.transformed(rng.sl_matrix(4))) == abc);
  }
  CHECK_THROWS_AS(abc_from_polygon(rng.twisted_polygon(3, 8)), Error);
}

TEST_CASE("xyz from abc on the all-ones sequence") {
  const auto xyz = xyz_from_abc(constant_abc(7, Q(1), Q(1), Q(1)));
  CHECK(xyz == Xyz3<Q>{std::vector<Q>(7, Q(1)), std::vector<Q>(7, Q(1)), std::vector<Q>(7, Q(1))});
}

TEST_CASE("xyz from abc satisfies the defining products") {
  RandomSource rng(51);
  const auto abc = abc_from_polygon(rng.twisted_polygon(3, 7));
  const auto xyz = xyz_from_abc(abc);
  for (int j = 0; j < 7; ++j) {
    const int k = (j + 1) % 7;
    CHECK(xyz.x[j] * abc.a[j] * abc.a[k] == abc.b[k]);
    CHECK(xyz.y[j] * abc.b[k] * abc.c[j] == abc.a[j]);
    CHECK(xyz.z[j] * abc.a[k] * abc.b[j] == abc.c[k]);
  }
}

TEST_CASE("geometric xyz agrees with the algebraic formula for odd n") {
  RandomSource rng(52);
  for (int n : {5, 7, 9}) {
    const auto poly = rng.twisted_polygon(3, n);
    CHECK(xyz_geometric(poly) == xyz_from_abc(abc_from_polygon(poly)));
  }
}

TEST_CASE("geometric xyz agrees with the quasiperiodic lift for even n") {
  RandomSource rng(53);
  for (int n : {6, 8, 10}) {
    const auto poly = rng.twisted_polygon(3, n);
    const auto q = quasi_abc_from_polygon(poly);
    CHECK(xyz_geometric(poly) == xyz_from_abc(q));
    const std::array<Q, 4> k{Q(2), Q(-3), Q(5, 7), Q(11, 2)};
    CHECK(xyz_from_abc(apply_gauge(q, k)) == xyz_from_abc(q));
  }
}

TEST_CASE("xyz is projectively invariant") {
  RandomSource rng(54);
  const auto poly = rng.twisted_polygon(3, 8);
  CHECK(xyz_geometric(poly.transformed(rng.sl_matrix(4))) == xyz_geometric(poly));
}

TEST_CASE("the explicit step reproduces the geometric map") {
  RandomSource rng(55);
  for (int n = 6; n <= 9; ++n) {
    const auto poly = rng.twisted_polygon(3, n);
    const auto image = general_map(poly, pentagram_map);
    CHECK(explicit_step(xyz_geometric(poly)) == xyz_geometric(image));
  }
}

TEST_CASE("the explicit step in floating point") {
  RandomSource rng(56);
  const auto poly = rng.twisted_polygon(3, 7);
  const auto exact = explicit_step(xyz_geometric(poly));
  const auto approx = explicit_step(xyz_geometric(to_backend<double>(poly)));
  for (int i = 0; i < 7; ++i) {
    CHECK(approx.x[i] == doctest::Approx(exact.x[i].to_double()).epsilon(1e-8));
    CHECK(approx.y[i] == doctest::Approx(exact.y[i].to_double()).epsilon(1e-8));
    CHECK(approx.z[i] == doctest::Approx(exact.z[i].to_double()).epsilon(1e-8));
  }
}

TEST_CASE("the all-ones point is fixed") {
  const Xyz3<Q> ones{std::vector<Q>(6, Q(1)), std::vector<Q>(6, Q(1)), std::vector<Q>(6, Q(1))};
  CHECK(explicit_step(ones) == ones);
}

TEST_CASE("the explicit step commutes with index rotation and scaling") {
  RandomSource rng(57);
  const auto xyz = xyz_geometric(rng.twisted_polygon(3, 7));
  CHECK(explicit_step(rotate(xyz, 2)) == rotate(explicit_step(xyz), 2));
  for (const Q s : {Q(2), Q(-1, 3)}) CHECK(explicit_step(scale_xyz(xyz, s)) == scale_xyz(explicit_step(xyz), s));
}

TEST_CASE("scaling in abc induces x / s^2") {
  RandomSource rng(58);
  auto abc = abc_from_polygon(rng.twisted_polygon(3, 7));
  const Q s(3, 2);
  const auto before = xyz_from_abc(abc);
  for (auto& v : abc.a) v *= s;
  for (auto& v : abc.c) v *= s;
  CHECK(xyz_from_abc(abc) == scale_xyz(before, s));
}

TEST_CASE("odd n normal form matches the periodic lift") {
  RandomSource rng(59);
  for (int n : {5, 7, 9, 11}) {
    const auto poly = rng.twisted_polygon(3, n);
    const auto nf = quasiperiodic_normalize(quasi_abc_from_polygon(poly));
    for (const auto& t : nf.rep.t) CHECK(t == Q(1));
    CHECK(nf.rep.abc == abc_from_polygon(poly));
  }
}

TEST_CASE("quasiperiodic data for n = 4p") {
  RandomSource rng(60);
  const auto poly = rng.twisted_polygon(3, 8);
  const auto q = quasi_abc_from_polygon(poly);
  CHECK(q.t[0] * q.t[1] * q.t[2] * q.t[3] == Q(1));
  const auto data = quasiperiodic_normalize(q).data;
  CHECK(data.all_invariant);
  const std::array<Q, 4> k{Q(2), Q(-3), Q(5, 7), Q(11, 2)};
  const auto gauged = quasiperiodic_normalize(apply_gauge(q, k)).data;
  CHECK(gauged.alpha == data.alpha);
  CHECK(gauged.beta == data.beta);
  CHECK(gauged.gamma == data.gamma);
  const auto inv = quasi_invariants_from_xyz(xyz_geometric(poly));
  REQUIRE(inv.size() == 3);
  CHECK(inv[0] == data.alpha);
  CHECK(inv[1] == data.beta);
  CHECK(inv[2] == data.gamma / data.alpha);
}

TEST_CASE("quasiperiodic data for n = 4p + 2") {
  RandomSource rng(61);
  for (int n : {6, 10}) {
    const auto poly = rng.twisted_polygon(3, n);
    const auto q = quasi_abc_from_polygon(poly);
    const auto data = quasiperiodic_normalize(q).data;
    CHECK_FALSE(data.all_invariant);
    const std::array<Q, 4> k{Q(2), Q(-3), Q(5, 7), Q(11, 2)};
    const auto gauged = quasiperiodic_normalize(apply_gauge(q, k)).data;
    CHECK(gauged.combined() == data.combined());
    CHECK(gauged.alpha != data.alpha);
    const auto inv = quasi_invariants_from_xyz(xyz_geometric(poly));
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == data.combined());
  }
}

TEST_CASE("alpha in abc coordinates") {
  CHECK(alpha_abc(constant_abc(5, Q(1), Q(2), Q(3))) == constant_abc(5, Q(3), Q(2), Q(1)));
  RandomSource rng(62);
  for (int n : {5, 7}) {
    const auto poly = rng.twisted_polygon(3, n);
    const auto abc = abc_from_polygon(poly);
    CHECK(alpha_abc(alpha_abc(abc)) == abc);
    CHECK(alpha_abc(abc) == abc_from_polygon(alpha_map(poly, 1, true)));
  }
}

TEST_CASE("beta in abc coordinates") {
  RandomSource rng(63);
  for (int n : {5, 7, 9}) {
    const auto poly = rng.twisted_polygon(3, n);
    const auto abc = abc_from_polygon(poly);
    const auto image = beta_abc(abc);
    CHECK(image == abc_from_polygon(alpha_map(poly, 2, true)));
    CHECK(beta_abc(image) == abc);
  }
  CHECK_THROWS_AS(beta_abc(constant_abc(6, Q(1), Q(1), Q(1))), Error);
}

TEST_CASE("2D corner coordinates follow the explicit rule") {
  RandomSource rng(64);
  for (int n : {5, 6, 7}) {
    const auto poly = rng.twisted_polygon(2, n);
    CHECK(xy2_step(xy2_from_polygon(poly)) == xy2_from_polygon(general_map(poly, pentagram_map)));
    CHECK(xy2_from_polygon(poly.transformed(rng.sl_matrix(3))) == xy2_from_polygon(poly));
  }
}

TEST_CASE("2D rescaling commutes with the map") {
  RandomSource rng(65);
  const auto xy = xy2_from_polygon(rng.twisted_polygon(2, 7));
  const Q s(5, 3);
  auto scale = [&](Xy2<Q> v) {
    for (auto& x : v.x) x *= s;
    for (auto& y : v.y) y /= s;
    return v;
  };
  CHECK(xy2_step(scale(xy)) == scale(xy2_step(xy)));
}

TEST_CASE("2D products x_i y_i constant give a fixed point up to shift") {
  Xy2<Q> xy{{Q(2), Q(3), Q(5), Q(7), Q(11)}, {}};
  for (const auto& x : xy.x) xy.y.push_back(Q(1, 3) / x);
  const auto image = xy2_step(xy);
  for (int i = 0; i < 5; ++i) {
    CHECK(image.x[i] == xy.x[i]);
    CHECK(image.y[i] == xy.y[(i + 1) % 5]);
  }
}
