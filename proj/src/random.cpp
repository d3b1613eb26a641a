#include "pentagram/random.hpp"

#include <cmath>
#include <numbers>

#include "pentagram/error.hpp"

namespace pentagram {

RandomSource::RandomSource(std::uint64_t seed, long bound) : engine_(seed), bound_(bound) {
  if (bound < 1 || bound > 97) throw Error(ErrorKind::ConfigError, "random bound must lie in [1, 97]");
}

Rational RandomSource::rational() {
  std::uniform_int_distribution<long> num(-bound_, bound_);
  std::uniform_int_distribution<long> den(1, bound_);
  const long p = num(engine_);
  return Rational(p, den(engine_));
}

Rational RandomSource::nonzero_rational() {
  Rational r;
  do r = rational();
  while (r.is_zero());
  return r;
}

Vec<Rational> RandomSource::vector(int dim) {
  Vec<Rational> v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rational();
  return v;
}

Mat<Rational> RandomSource::sl_matrix(int dim) {
  std::uniform_int_distribution<int> idx(0, dim - 1);
  Mat<Rational> m = Mat<Rational>::Identity(dim, dim);
  for (int step = 0; step < 3 * dim; ++step) {
    const int i = idx(engine_);
    int j = idx(engine_);
    if (i == j) j = (j + 1) % dim;
    const Rational c = nonzero_rational();
    m.row(i) += c * m.row(j);
  }
  return m;
}

TwistedPolygon<Rational> RandomSource::polygon_with(int d, int n, const Mat<Rational>& monodromy) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vec<Rational>> vs;
    for (int k = 0; k < n; ++k) vs.push_back(vector(d + 1));
    bool zero_vertex = false;
    for (const auto& v : vs) zero_vertex = zero_vertex || v.isZero();
    if (zero_vertex) continue;
    TwistedPolygon<Rational> poly(std::move(vs), monodromy);
    bool generic = true;
    for (int j = 0; j < n && generic; ++j) {
      std::vector<Vec<Rational>> cols;
      for (int i = 0; i <= d; ++i) cols.push_back(poly.vertex(j + i));
      generic = !determinant(stack_cols(cols)).is_zero();
    }
    if (generic) return poly;
  }
  throw Error(ErrorKind::DegenerateInput, "could not draw a polygon in general position");
}

TwistedPolygon<Rational> RandomSource::twisted_polygon(int d, int n) {
  return polygon_with(d, n, sl_matrix(d + 1));
}

TwistedPolygon<Rational> RandomSource::closed_polygon(int d, int n) {
  return polygon_with(d, n, Mat<Rational>::Identity(d + 1, d + 1));
}

TwistedPolygon<Rational> RandomSource::near_regular_polygon(int d, int n, double jitter) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const Rational c1(99, 101), s1(20, 101);
  Mat<Rational> rot = Mat<Rational>::Identity(d + 1, d + 1);
  Rational cj(1), sj(0);
  for (int i = 1; i <= d; i += 2) {
    const Rational next_c = cj * c1 - sj * s1;
    sj = sj * c1 + cj * s1;
    cj = next_c;
    if (i + 1 > d) {
      // A lone cosine coordinate cannot rotate; keep the top harmonic fixed.
      break;
    }
    rot(i, i) = cj;
    rot(i, i + 1) = -sj;
    rot(i + 1, i) = sj;
    rot(i + 1, i + 1) = cj;
  }
  const double phi = std::atan2(20.0, 99.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vec<Rational>> vs;
    for (int k = 0; k < n; ++k) {
      const double t = (2.0 * std::numbers::pi + phi) * k / n;
      Vec<Rational> v(d + 1);
      for (int i = 0; i <= d; ++i) {
        const int harmonic = (i + 1) / 2;
        const double base = i == 0 ? 1.0 : (i % 2 == 1 ? std::cos(harmonic * t) : std::sin(harmonic * t));
        v(i) = Rational(std::lround(97.0 * (base + jitter * unit(engine_))), 97);
      }
      vs.push_back(v);
    }
    bool ok = true;
    for (const auto& v : vs) ok = ok && !v.isZero();
    if (!ok) continue;
    TwistedPolygon<Rational> poly(std::move(vs), rot);
    for (int j = 0; j < n && ok; ++j) {
      std::vector<Vec<Rational>> cols;
      for (int i = 0; i <= d; ++i) cols.push_back(poly.vertex(j + i));
      ok = !determinant(stack_cols(cols)).is_zero();
    }
    if (ok) return poly;
  }
  throw Error(ErrorKind::DegenerateInput, "could not draw a polygon in general position");
}

CoeffSeq<Rational> RandomSource::coefficient_sequence(int d, int n, double magnitude) {
  if (d < 1 || n < 1) throw Error(ErrorKind::ConfigError, "coefficient sequence needs d >= 1 and n >= 1");
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  CoeffSeq<Rational> out{d, n, Mat<Rational>(n, d)};
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < d; ++k) out.a(j, k) = Rational(std::lround(97.0 * magnitude * unit(engine_)), 97);
  return out;
}

template <class S>
CoeffSeq<S> to_backend(const CoeffSeq<Rational>& coeffs) {
  return CoeffSeq<S>{coeffs.d, coeffs.n, convert<S>(coeffs.a)};
}

template <class S>
TwistedPolygon<S> to_backend(const TwistedPolygon<Rational>& poly) {
  if constexpr (std::is_same_v<S, Rational>) {
    return poly;
  } else {
    std::vector<Vec<S>> vs;
    for (const auto& v : poly.vertices()) vs.push_back(convert<S>(v));
    return TwistedPolygon<S>(std::move(vs), convert<S>(poly.monodromy()));
  }
}

template TwistedPolygon<Rational> to_backend<Rational>(const TwistedPolygon<Rational>&);
template TwistedPolygon<double> to_backend<double>(const TwistedPolygon<Rational>&);
template CoeffSeq<Rational> to_backend<Rational>(const CoeffSeq<Rational>&);
template CoeffSeq<double> to_backend<double>(const CoeffSeq<Rational>&);

}  // namespace pentagram
