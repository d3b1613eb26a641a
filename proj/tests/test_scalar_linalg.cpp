#include <doctest.h>

#include "pentagram/error.hpp"
#include "pentagram/linalg.hpp"

using namespace pentagram;

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK((a - a).is_zero());
  CHECK(Rational("-6/4") == Rational(-3, 2));
  CHECK(Rational(-3, 2).to_string() == "-3/2");
  CHECK(Rational(5).to_string() == "5");
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational("x/2"), Error);
}

TEST_CASE("rational roots and powers") {
  CHECK(Rational(16, 81).root(4) == Rational(2, 3));
  CHECK(Rational(-8, 27).root(3) == Rational(-2, 3));
  CHECK_FALSE(Rational(2).root(2).has_value());
  CHECK_FALSE(Rational(-16).root(4).has_value());
  CHECK(Rational(2, 3).pow(-3) == Rational(27, 8));
}

TEST_CASE("float formatting round-trips") {
  const double x = 0.1 + 0.2;
  CHECK(ScalarTraits<double>::parse(ScalarTraits<double>::to_string(x)) == x);
  CHECK(ScalarTraits<double>::parse("3/4") == 0.75);
}

TEST_CASE("determinant, inverse and solve over rationals") {
  Mat<Rational> m(3, 3);
  m << 2, 1, 0, 1, 3, 1, 0, 1, 4;
  CHECK(determinant(m) == Rational(18));
  const Mat<Rational> inv = inverse(m);
  CHECK(m * inv == Mat<Rational>::Identity(3, 3));
  Vec<Rational> b(3);
  b << 1, 2, 3;
  const Vec<Rational> x = solve(m, b);
  CHECK(m * x == b);
}

TEST_CASE("rank and kernel") {
  Mat<Rational> m(2, 4);
  m << 1, 2, 3, 4, 2, 4, 6, 9;
  CHECK(rank(m) == 2);
  const Mat<Rational> k = kernel(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).isZero());

  Mat<double> s(2, 2);
  s << 1.0, 2.0, 2.0, 4.0 + 1e-15;
  CHECK(rank(s) == 1);
  Mat<Rational> sing(2, 2);
  sing << 1, 2, 2, 4;
  CHECK_THROWS_AS(inverse(sing), Error);
}

TEST_CASE("generalized cross product satisfies the determinant identity") {
  std::vector<Vec<Rational>> vs(3, Vec<Rational>(4));
  vs[0] << 1, 2, 0, Rational(1, 3);
  vs[1] << 0, 1, 5, 2;
  vs[2] << 3, Rational(-1, 2), 1, 1;
  const Vec<Rational> c = cross(vs);
  Vec<Rational> w(4);
  w << 7, 1, -2, 3;
  std::vector<Vec<Rational>> all = vs;
  all.push_back(w);
  CHECK(c.dot(w) == determinant(stack_rows(all)));
  for (const auto& v : vs) CHECK(c.dot(v) == Rational(0));
}
