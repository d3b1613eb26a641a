#include <doctest.h>

#include <cmath>

#include "pentagram/error.hpp"
#include "pentagram/random.hpp"
#include "pentagram/spectral.hpp"

using namespace pentagram;
using Q = Rational;
using LP = LaurentPoly<Q>;
using PM = PolyMatrix<Q>;

namespace {

Xyz3<Q> random_xyz(RandomSource& rng, int n) { return xyz_geometric(rng.twisted_polygon(3, n)); }

PM diagonal(const std::vector<Q>& d) {
  PM out(static_cast<int>(d.size()));
  for (int i = 0; i < out.dim(); ++i) out(i, i) = LP(d[i]);
  return out;
}

Q product(const std::vector<Q>& v) {
  Q out(1);
  for (const auto& x : v) out *= x;
  return out;
}

}  // namespace

TEST_CASE("Laurent arithmetic") {
  const LP p = LP::monomial(Q(2), -1) + LP(Q(3));
  const LP q = LP::monomial(Q(1), 1) - LP(Q(1));
  const LP pq = p * q;
  CHECK(pq == LP::monomial(Q(-2), -1) + LP(Q(-1)) + LP::monomial(Q(3), 1));
  CHECK((p - p).is_zero());
  CHECK((p - p).terms().empty());
  CHECK(pq.evaluate(Q(2)) == p.evaluate(Q(2)) * q.evaluate(Q(2)));
  CHECK(p.derivative() == LP::monomial(Q(-2), -2));
  CHECK(*pq.min_exponent() == -1);
  CHECK(*pq.max_exponent() == 1);
  CHECK(LP(Q(0)).is_zero());
}

TEST_CASE("abc Lax matrix, its determinant and companion inverse") {
  const PM l = lax_abc(Q(1), Q(1), Q(1));
  CHECK(l.determinant() == LP::monomial(Q(1), -2));
  RandomSource rng(70);
  for (int trial = 0; trial < 3; ++trial) {
    const Q a = rng.nonzero_rational(), b = rng.rational(), c = rng.rational();
    const PM lj = lax_abc(a, b, c);
    CHECK(lj.determinant() == LP::monomial(Q(1), -2));
    CHECK(lj * lax_abc_inverse(a, b, c) == PM::identity(4));
    const PM inv = lax_abc_inverse(a, b, c);
    CHECK(inv(1, 0) == LP::monomial(Q(1), 1));
    CHECK(inv(2, 1) == LP(Q(1)));
    CHECK(inv(3, 2) == LP::monomial(Q(1), 1));
    CHECK(inv(0, 3) == LP(Q(-1)));
    CHECK(inv(1, 3) == LP(c));
    CHECK(inv(2, 3) == LP(b));
    CHECK(inv(3, 3) == LP(a));
  }
}

TEST_CASE("abc Lax matrix comes from the scaled companion matrix") {
  const Q a(2, 3), b(-5), c(7, 2);
  for (const Q s : {Q(3), Q(-1, 2)}) {
    Mat<Q> n_s = Mat<Q>::Zero(4, 4);
    n_s(1, 0) = n_s(2, 1) = n_s(3, 2) = Q(1);
    n_s(0, 3) = Q(-1);
    n_s(1, 3) = s * c;
    n_s(2, 3) = b;
    n_s(3, 3) = s * a;
    Mat<Q> g = Mat<Q>::Identity(4, 4);
    g(1, 1) = g(3, 3) = s;
    const Mat<Q> expected = inverse(g) * n_s * g / s;
    CHECK(lax_abc_inverse(a, b, c).evaluate(Q(1) / (s * s)) == expected);
  }
}

TEST_CASE("xyz Lax matrix") {
  const PM ones = lax_xyz(Q(1), Q(1), Q(1));
  CHECK(ones.evaluate(Q(1)) == ones.evaluate(Q(1)));
  RandomSource rng(71);
  const Q x = rng.nonzero_rational(), y = rng.nonzero_rational(), z = rng.nonzero_rational();
  const PM l = lax_xyz(x, y, z);
  CHECK(l.determinant() == LP::monomial(Q(1) / (x * x * y * z), -2));
  CHECK(l * lax_xyz_inverse(x, y, z) == PM::identity(4));
  CHECK(lax_xyz_inverse(x, y, z) * l == PM::identity(4));
  CHECK_THROWS_AS(lax_xyz(Q(0), Q(1), Q(1)), Error);
}

TEST_CASE("xyz and abc Lax matrices are gauge equivalent") {
  RandomSource rng(72);
  const auto abc = abc_from_polygon(rng.twisted_polygon(3, 7));
  const auto xyz = xyz_from_abc(abc);
  for (int i = 0; i < 7; ++i) {
    const int k = (i + 1) % 7;
    const PM h_i = diagonal({Q(1), abc.c[i], abc.b[i], abc.a[i]});
    const PM h_k_inv = diagonal({Q(1), Q(1) / abc.c[k], Q(1) / abc.b[k], Q(1) / abc.a[k]});
    const PM rhs = h_k_inv * lax_abc(abc.a[i], abc.b[i], abc.c[i]) * h_i * PM::constant(Mat<Q>::Identity(4, 4) * abc.a[k]);
    CHECK(lax_xyz(xyz.x[i], xyz.y[i], xyz.z[i]) == rhs);
  }
}

TEST_CASE("P matrix at the all-ones point") {
  const Xyz3<Q> ones{std::vector<Q>(7, Q(1)), std::vector<Q>(7, Q(1)), std::vector<Q>(7, Q(1))};
  const PM p = p_matrix_xyz(ones, 3);
  // tau = 3, theta = 1/3, rho = 1/3, sigma = 1/3.
  CHECK(p(2, 1) == LP(Q(1, 3)));
  CHECK(p(2, 2) == LP(Q(-1, 3)));
  CHECK(p(0, 1) == LP(Q(1, 3)));
  CHECK(p(1, 2) == LP::monomial(Q(1, 3), 1));
  CHECK(verify_lax(ones) == Q(0));
}

TEST_CASE("exact Lax identity for n = 6..9") {
  RandomSource rng(73);
  for (int n = 6; n <= 9; ++n)
    for (int trial = 0; trial < 2; ++trial) CHECK(verify_lax(random_xyz(rng, n)) == Q(0));
}

TEST_CASE("Lax identity negative control") {
  RandomSource rng(74);
  const auto xyz = random_xyz(rng, 7);
  auto next = explicit_step(xyz);
  next.x[2] += Q(1);
  CHECK(lax_defect(xyz, next) > Q(0));
}

TEST_CASE("general Lax matrix") {
  RandomSource rng(75);
  const Q a = rng.rational(), b = rng.rational(), c = rng.rational();
  CHECK(lax_general<Q>(3, {c, b, a}) == lax_abc(a, b, c));
  for (int d = 1; d <= 6; ++d) {
    std::vector<Q> row;
    for (int k = 0; k < d; ++k) row.push_back(rng.rational());
    const PM l = lax_general(d, row);
    CHECK(l * lax_general_inverse(d, row) == PM::identity(d + 1));
    const int lambdas = d % 2 == 1 ? (d + 1) / 2 : d / 2;
    const LP det = l.determinant();
    REQUIRE(det.terms().size() == 1);
    CHECK(*det.min_exponent() == -lambdas);
  }
}

TEST_CASE("monodromy determinant and base point independence") {
  RandomSource rng(76);
  const auto abc = abc_from_polygon(rng.twisted_polygon(3, 7));
  const auto lax = lax_matrices(abc);
  const PM t0 = monodromy(lax);
  CHECK(t0.determinant() == LP::monomial(Q(1), -14));
  const auto r0 = spectral_function(t0, 7);
  for (long base : {1L, 4L, 6L}) CHECK(spectral_function(monodromy(lax, base), 7) == r0);
  const std::vector<PM> single{lax_abc(Q(1), Q(2), Q(3))};
  CHECK(monodromy(single) == single[0]);
}

TEST_CASE("abc and xyz spectral functions agree for odd n") {
  RandomSource rng(77);
  for (int n : {5, 7}) {
    const auto abc = abc_from_polygon(rng.twisted_polygon(3, n));
    const auto r_abc = spectral_function(abc);
    const auto r_xyz = spectral_function(xyz_from_abc(abc), std::optional<Q>(product(abc.a)));
    CHECK(r_abc == r_xyz);
    CHECK(r_abc.k_coeffs[0] == LP::monomial(Q(1), -2 * n));
    CHECK(r_abc.k_coeffs[4] == LP(Q(1)));
  }
  const auto xyz = random_xyz(rng, 7);
  CHECK_THROWS_AS(spectral_function(xyz, std::optional<Q>(Q(12345))), Error);
}

TEST_CASE("even n keeps the unnormalized function when I_0 is irrational") {
  RandomSource rng(78);
  const auto xyz = random_xyz(rng, 8);
  const auto r = spectral_function(xyz);
  Q prod(1);
  for (int j = 0; j < 8; ++j) prod *= xyz.x[j] * xyz.x[j] * xyz.y[j] * xyz.z[j];
  CHECK(r.branch_ambiguity == (prod < Q(0)));
  if (!r.normalized) {
    CHECK(r.i0_fourth * prod == Q(1));
    CHECK(r.k_coeffs[0] == LP::monomial(r.i0_fourth, -16));
  }
  CHECK_NOTHROW(extract_integrals(r));
}

TEST_CASE("integrals are exactly conserved along explicit steps") {
  RandomSource rng(79);
  for (int n : {7, 8}) {
    auto xyz = random_xyz(rng, n);
    const auto first = extract_integrals(spectral_function(xyz));
    for (int step = 0; step < 3; ++step) {
      xyz = explicit_step(xyz);
      CHECK(extract_integrals(spectral_function(xyz)) == first);
    }
  }
}

TEST_CASE("integrals drift little in floating point") {
  RandomSource rng(80);
  auto xyz = xyz_geometric(to_backend<double>(rng.twisted_polygon(3, 7)));
  const auto first = extract_integrals(spectral_function(xyz));
  for (int step = 0; step < 20; ++step) xyz = explicit_step(xyz);
  const auto last = extract_integrals(spectral_function(xyz));
  for (std::size_t j = 0; j < first.I.size(); ++j) {
    CHECK(last.I[j] == doctest::Approx(first.I[j]).epsilon(1e-9));
    CHECK(last.J[j] == doctest::Approx(first.J[j]).epsilon(1e-9));
    CHECK(last.G[j] == doctest::Approx(first.G[j]).epsilon(1e-9));
  }
}

TEST_CASE("I_0 and G_0 are products of a and c") {
  RandomSource rng(81);
  for (int n : {5, 7, 9}) {
    const auto abc = abc_from_polygon(rng.twisted_polygon(3, n));
    const auto integrals = extract_integrals(spectral_function(abc));
    CHECK(integrals.I.size() == static_cast<std::size_t>(n / 2 + 1));
    CHECK(integrals.I[0] == product(abc.a));
    CHECK(integrals.G[0] == product(abc.c));
  }
}

TEST_CASE("support outside the windows is rejected") {
  RandomSource rng(82);
  auto r = spectral_function(abc_from_polygon(rng.twisted_polygon(3, 7)));
  r.k_coeffs[2] += LP::monomial(Q(1), 3);
  CHECK_THROWS_AS(extract_integrals(r), Error);
  try {
    extract_integrals(r);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnexpectedSupport);
    CHECK(e.index() == 2);
  }
}

TEST_CASE("weight-one admissible codes for n = 7") {
  const std::vector<std::string> expected{"1222", "124", "142", "223", "34"};
  CHECK(admissible_codes(7, 1) == expected);
  CHECK(admissible_codes(7, 7) == std::vector<std::string>{"1111111"});
}

TEST_CASE("code sums match the explicit weight-one sum and the spectral integrals") {
  RandomSource rng(83);
  const auto abc = abc_from_polygon(rng.twisted_polygon(3, 7));
  const int n = 7;
  auto a = [&](long i) { return abc.a[positive_mod(i, n)]; };
  auto b = [&](long i) { return abc.b[positive_mod(i, n)]; };
  auto c = [&](long i) { return abc.c[positive_mod(i, n)]; };
  Q explicit_sum(0);
  for (long s = 0; s < n; ++s)
    explicit_sum += -a(1 + s) * b(s) - a(5 + s) * b(s) + a(5 + s) * b(s) * b(2 + s) * b(4 + s) - c(s) + c(s) * b(2 + s) * b(4 + s);
  const auto [i1, g1] = code_integrals(abc, 1);
  CHECK(i1 == explicit_sum);
  const auto integrals = extract_integrals(spectral_function(abc));
  for (int i = 0; i <= n / 2; ++i) {
    const auto [ih, gh] = code_integrals(abc, n - 2 * i);
    CHECK(ih == integrals.I[i]);
    CHECK(gh == integrals.G[i]);
  }
  CHECK(g1 == integrals.G[3]);
}

TEST_CASE("codes without multiplicity collapse") {
  const Abc3<Q> abc{std::vector<Q>(9, Q(1)), std::vector<Q>(9, Q(1)), std::vector<Q>(9, Q(1))};
  // Code 333 contributes 3 distinct monomials, not 9.
  const auto reps = admissible_codes(9, 3);
  CHECK(std::find(reps.begin(), reps.end(), "333") != reps.end());
  Abc3<Q> probe = abc;
  for (auto& v : probe.a) v = Q(0);
  for (auto& v : probe.b) v = Q(0);
  CHECK(code_integrals(probe, 3).first == Q(3));
}

TEST_CASE("scaling exponents") {
  CHECK(scaling_exponents(3) == std::vector<long>{1, 0, 1});
  CHECK(scaling_exponents(2) == std::vector<long>{-1, 1});
  CHECK(scaling_exponents(4) == std::vector<long>{-2, 1, -1, 2});
  RandomSource rng(84);
  const auto coeffs = coefficients(rng.twisted_polygon(3, 7));
  const auto scaled = scaling(coeffs, Q(2));
  const auto abc = abc_from_coeffs(coeffs);
  const auto sabc = abc_from_coeffs(scaled);
  for (int j = 0; j < 7; ++j) {
    CHECK(sabc.a[j] == Q(2) * abc.a[j]);
    CHECK(sabc.b[j] == abc.b[j]);
    CHECK(sabc.c[j] == Q(2) * abc.c[j]);
  }
  CHECK(scaling(coeffs, Q(1)) == coeffs);
}

TEST_CASE("scaling invariance, exact in dimensions 2 and 3") {
  RandomSource rng(85);
  CHECK(scaling_invariance_defect(rng.twisted_polygon(3, 7), Q(2)) == Q(0));
  CHECK(scaling_invariance_defect(rng.twisted_polygon(3, 8), Q(2)) == Q(0));
  CHECK(scaling_invariance_defect(rng.twisted_polygon(2, 7), Q(3)) == Q(0));
  CHECK(scaling_invariance_defect(rng.twisted_polygon(2, 6), Q(3)) == Q(0));
}

TEST_CASE("scaling invariance in higher dimensions, exact") {
  RandomSource rng(88);
  for (const auto& [d, n] : std::vector<std::pair<int, int>>{{4, 7}, {5, 7}, {6, 8}}) {
    const auto poly = rng.twisted_polygon(d, n);
    for (const Q s : {Q(1, 2), Q(3)}) CHECK(scaling_invariance_defect(poly, s) == Q(0));
  }
}

TEST_CASE("scaling invariance in higher dimensions, floating point") {
  // Inputs sit halfway along the scaling orbit, c = scaling(c0, 1/sqrt(s)), so both sides of the
  // comparison are moderate polygons.
  RandomSource rng(86);
  for (const auto& [d, n] : std::vector<std::pair<int, int>>{{4, 7}, {5, 7}, {6, 8}}) {
    const auto c0 = to_backend<double>(rng.coefficient_sequence(d, n));
    for (const double s : {0.5, 1.5, 3.0}) {
      CAPTURE(d);
      CAPTURE(s);
      CHECK(scaling_invariance_defect(scaling(c0, 1.0 / std::sqrt(s)), s) < 1e-8);
    }
  }
}

TEST_CASE("scaling invariance with zero coefficients") {
  RandomSource rng(94);
  for (const int d : {4, 5}) {
    auto c = rng.coefficient_sequence(d, 7);
    c.a(2, 0) = Q(0);
    c.a(4, d - 1) = Q(0);
    c.a(5, 1) = Q(0);
    CAPTURE(d);
    CHECK(scaling_invariance_defect(c, Q(3)) == Q(0));
    CHECK(scaling_invariance_defect(to_backend<double>(c), 1.5) < 1e-8);
  }
}

TEST_CASE("2D spectral data is conserved by the map") {
  RandomSource rng(87);
  const auto poly = rng.twisted_polygon(2, 7);
  CHECK(spectral_function(coefficients(poly)) == spectral_function(coefficients(general_map(poly, pentagram_map))));
}

TEST_CASE("branch census and genus") {
  RandomSource rng(88);
  const std::vector<std::pair<int, int>> expected{{5, 6}, {6, 6}, {7, 9}, {8, 9}};
  for (const auto& [n, genus] : expected) {
    const auto r = spectral_function(rng.twisted_polygon(3, n));
    const auto census = finite_branch_count(r);
    CHECK(census.nu_finite == 3 * n);
    CHECK(census.genus == genus);
    CHECK(census.squarefree);
  }
}

TEST_CASE("discriminant agrees with Sylvester determinants") {
  RandomSource rng(89);
  const auto r = spectral_function(rng.twisted_polygon(3, 5));
  const auto disc = discriminant_in_lambda(r);
  for (const Q lambda : {Q(2), Q(-1, 3), Q(5, 7)}) {
    Q value(0);
    for (auto it = disc.rbegin(); it != disc.rend(); ++it) value = value * lambda + *it;
    CHECK(value * lambda.pow(10) == sylvester_resultant_at(r, lambda));
  }
}

TEST_CASE("dependency identity holds for twisted polygons and fails when perturbed") {
  RandomSource rng(90);
  for (int n : {5, 7, 9}) {
    const auto res = closedness_residuals(rng.twisted_polygon(3, n));
    CHECK(res.identity_plus == Q(0));
    CHECK(res.identity_minus == Q(0));
    bool some_nonzero = false;
    for (const auto& v : res.plus) some_nonzero = some_nonzero || !(v == Q(0));
    CHECK(some_nonzero);
  }
  auto r = spectral_function(rng.twisted_polygon(3, 7));
  r.k_coeffs[0] += LP::monomial(Q(1, 5), -14);
  CHECK_FALSE(closedness_residuals(r).identity_plus == Q(0));
}

TEST_CASE("dependency identity from the k-coefficients, normalized or not") {
  RandomSource rng(93);
  for (int n = 5; n <= 9; ++n) {
    const auto poly = rng.twisted_polygon(3, n);
    Xyz3<Q> free;
    for (int i = 0; i < n; ++i) {
      free.x.push_back(rng.nonzero_rational());
      free.y.push_back(rng.nonzero_rational());
      free.z.push_back(rng.nonzero_rational());
    }
    const auto from_free = spectral_function(free);
    CAPTURE(n);
    if (n % 2 == 0) CHECK_FALSE(from_free.normalized);
    for (const auto& r : {spectral_function(poly), spectral_function(xyz_geometric(poly)), from_free}) {
      const auto [plus, minus] = dependency_identity(r);
      CHECK(plus == Q(0));
      CHECK(minus == Q(0));
      if (r.normalized) {
        const auto res = closedness_residuals(r);
        CHECK(res.identity_plus == plus);
        CHECK(res.identity_minus == minus);
      }
      auto bent = r;
      bent.k_coeffs[0] += LP::monomial(Q(1, 5), -3 * n);
      CHECK_FALSE(dependency_identity(bent).first == Q(0));
    }
  }
}

TEST_CASE("closed polygons give a quadruple point") {
  RandomSource rng(91);
  for (int trial = 0; trial < 2; ++trial) {
    const auto res = closedness_residuals(rng.closed_polygon(3, 7));
    bool plus = true, minus = true;
    for (const auto& v : res.plus) plus = plus && v == Q(0);
    for (const auto& v : res.minus) minus = minus && v == Q(0);
    CHECK((plus || minus));
  }
}

TEST_CASE("the closed-polygon conditions have rank nine") {
  for (int n = 6; n <= 9; ++n)
    for (int sign : {1, -1}) CHECK(rank(closed_condition_system(n, sign).first) == 9);
}

TEST_CASE("closed-polygon conditions match direct evaluation") {
  RandomSource rng(92);
  const auto r = spectral_function(rng.twisted_polygon(3, 7));
  const auto integrals = extract_integrals(r);
  const auto res = closedness_residuals(r);
  Vec<Q> v(12);
  for (int j = 0; j < 4; ++j) {
    v(j) = integrals.I[j];
    v(4 + j) = integrals.J[j];
    v(8 + j) = integrals.G[j];
  }
  const auto [m, rhs] = closed_condition_system(7, -1);
  const Vec<Q> lhs = m * v + rhs;
  for (int i = 0; i < 10; ++i) CHECK(lhs(i) == res.minus[i]);
}
