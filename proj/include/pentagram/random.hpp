#pragma once

#include <cstdint>
#include <random>

#include "pentagram/projective.hpp"

namespace pentagram {

// Seeded source of small rational test data. Numerators and denominators are
// bounded by `bound` (at most 97) to keep exact products tractable.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, long bound = 12);

  Rational rational();
  Rational nonzero_rational();
  Vec<Rational> vector(int dim);
  // Product of random unipotent elementary matrices: determinant exactly 1.
  Mat<Rational> sl_matrix(int dim);
  TwistedPolygon<Rational> twisted_polygon(int d, int n);
  TwistedPolygon<Rational> closed_polygon(int d, int n);
  // Twisted polygon near the trigonometric moment curve (1, cos t, sin t, cos 2t, ...) at
  // t_k = k (2 pi + phi) / n, coordinates rounded to multiples of 1/97 after a random jitter.
  // The monodromy rotates harmonic j by j phi with cos phi = 99/101, exactly.
  // Well conditioned for floating point work.
  TwistedPolygon<Rational> near_regular_polygon(int d, int n, double jitter = 0.05);
  // Entries uniform in [-magnitude, magnitude], rounded to multiples of 1/97.
  CoeffSeq<Rational> coefficient_sequence(int d, int n, double magnitude = 0.7);

 private:
  TwistedPolygon<Rational> polygon_with(int d, int n, const Mat<Rational>& monodromy);

  std::mt19937_64 engine_;
  long bound_;
};

template <class S>
TwistedPolygon<S> to_backend(const TwistedPolygon<Rational>& poly);

template <class S>
CoeffSeq<S> to_backend(const CoeffSeq<Rational>& coeffs);

}  // namespace pentagram
