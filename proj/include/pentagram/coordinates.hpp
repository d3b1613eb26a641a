#pragma once

#include <array>
#include <vector>

#include "pentagram/projective.hpp"

namespace pentagram {

// Coefficients of V_{j+4} = a_j V_{j+3} + b_j V_{j+2} + c_j V_{j+1} - V_j.
template <class S>
struct Abc3 {
  std::vector<S> a, b, c;

  int size() const noexcept { return static_cast<int>(a.size()); }
  friend bool operator==(const Abc3&, const Abc3&) = default;
};

template <class S>
struct Xyz3 {
  std::vector<S> x, y, z;

  int size() const noexcept { return static_cast<int>(x.size()); }
  friend bool operator==(const Xyz3&, const Xyz3&) = default;
};

template <class S>
struct Xy2 {
  std::vector<S> x, y;

  int size() const noexcept { return static_cast<int>(x.size()); }
  friend bool operator==(const Xy2&, const Xy2&) = default;
};

// Quasiperiodic representative: V_{j+n} = t_{j mod 4} M V_j with t_0 t_1 t_2 t_3 = 1,
// and (a, b, c)_{j+n} = (a_j t_j / t_{j+3}, b_j t_j / t_{j+2}, c_j t_j / t_{j+1}).
template <class S>
struct QuasiAbc {
  Abc3<S> abc;
  std::array<S, 4> t;

  // (a_j, b_j, c_j) for any j >= 0 through the quasiperiodic extension.
  std::array<S, 3> at(long j) const;
};

// alpha = t0/t3, beta = t0/t2, gamma = t0/t1. For n = 4p + 2 only
// alpha * gamma / beta is a projective invariant.
template <class S>
struct QuasiData {
  S alpha = S(1), beta = S(1), gamma = S(1);
  bool all_invariant = true;

  S combined() const { return alpha * gamma / beta; }
};

template <class S>
struct QuasiNormalForm {
  QuasiAbc<S> rep;
  QuasiData<S> data;
};

template <class S>
Abc3<S> abc_from_coeffs(const CoeffSeq<S>& coeffs);

template <class S>
CoeffSeq<S> coeffs_from_abc(const Abc3<S>& abc);

// Odd n only: (a, b, c) of the periodic lift.
template <class S>
Abc3<S> abc_from_polygon(const TwistedPolygon<S>& poly, const Tolerance& tol = {});

// Any n: the lift built from the first three vertices and unit determinants.
template <class S>
QuasiAbc<S> quasi_abc_from_polygon(const TwistedPolygon<S>& poly);

// The (R*)^3 rescaling V_j -> k_{j mod 4} V_j.
template <class S>
QuasiAbc<S> apply_gauge(const QuasiAbc<S>& q, const std::array<S, 4>& k);

template <class S>
QuasiNormalForm<S> quasiperiodic_normalize(const QuasiAbc<S>& q);

template <class S>
Xyz3<S> xyz_from_abc(const Abc3<S>& abc);

template <class S>
Xyz3<S> xyz_from_abc(const QuasiAbc<S>& q);

template <class S>
Xyz3<S> xyz_geometric(const TwistedPolygon<S>& poly);

template <class S>
Xyz3<S> explicit_step(const Xyz3<S>& xyz);

// n = 4p + 2: one product (alpha gamma / beta). n = 4p: three products
// (alpha, beta, gamma / alpha).
template <class S>
std::vector<S> quasi_invariants_from_xyz(const Xyz3<S>& xyz);

// Action induced on (x, y, z) by (a, b, c) -> (s a, b, s c): (x / s^2, y, z).
template <class S>
Xyz3<S> scale_xyz(const Xyz3<S>& xyz, const S& s);

template <class S>
Xy2<S> xy2_from_polygon(const TwistedPolygon<S>& poly);

template <class S>
Xy2<S> xy2_step(const Xy2<S>& xy);

template <class S>
Abc3<S> alpha_abc(const Abc3<S>& abc);

template <class S>
Abc3<S> beta_abc(const Abc3<S>& abc);

}  // namespace pentagram
