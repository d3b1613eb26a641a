#pragma once

#include <array>
#include <vector>

#include "pentagram/scalar.hpp"

namespace pentagram {

// c_0 + sum_k (a_k cos kx + b_k sin kx); a[k-1] and b[k-1] hold frequency k.
template <class Real>
struct TrigPoly {
  Real constant = Real(0);
  std::vector<Real> a, b;

  Real operator()(Real x) const { return derivative(x, 0); }
  Real derivative(Real x, int order) const;
  // u^{(m)}(x0) / m! for m < count.
  std::vector<Real> taylor(Real x0, int count) const;
};

// d/dx^{d+1} + u[d-1] d/dx^{d-1} + ... + u[0].
template <class Real>
struct CurveOperator {
  int d = 0;
  std::vector<TrigPoly<Real>> u;

  Vec<Real> sample(int j, int grid) const;
};

// Fundamental system on the uniform grid x_m = 2 pi m / N. derivs[m](a, i) is the i-th
// derivative of solution a at x_m; G(x) is the column of solution values.
template <class Real>
struct CurveSamples {
  CurveOperator<Real> op;
  std::vector<Real> x;
  std::vector<Mat<Real>> derivs;
  Mat<Real> monodromy;

  int dim() const noexcept { return op.d; }
  int size() const noexcept { return static_cast<int>(x.size()); }
  Vec<Real> G(int m, int order = 0) const { return derivs[m].col(order); }
  Real wronskian(int m) const;
  // Column k is G^{(k)}(x_m) / k! for k < count.
  Mat<Real> taylor(int m, int count) const;
  // G^{(order)} at any x, from the Taylor series at the nearest grid point.
  Vec<Real> evaluate(Real x, int order = 0) const;
};

template <class Real>
CurveSamples<Real> fundamental_solutions(const CurveOperator<Real>& op, int grid = 256);

// Default nodes: -k..k for odd d = 2k+1 and +-1, +-3, ..., +-(d-1) for even d.
template <class Real>
std::vector<Real> symmetric_offsets(int d);

// 0.02 * 2^{-j}, j < count.
template <class Real>
std::vector<Real> epsilon_grid(int count = 5, Real top = Real(0.02));

// derivs[m] column i is L_eps^{(i)}(x_m) for i <= d+1, with unit Wronskian.
template <class Real>
struct EnvelopeSamples {
  Real eps = Real(0);
  std::vector<Real> offsets;
  std::vector<Mat<Real>> derivs;

  Vec<Real> L(int m) const { return derivs[m].col(0); }
  Real wronskian(int m) const;
};

// Envelope of the hyperplanes through G(x + t_i eps). The hyperplane is spanned by divided
// differences of the nodes and all x-derivatives are taken on truncated Taylor series, so nothing
// cancels as eps shrinks.
template <class Real>
EnvelopeSamples<Real> envelope(const CurveSamples<Real>& curve, Real eps, std::vector<Real> offsets = {});

// G'' + 2/(d+1) u_{d-1} G at every grid point.
template <class Real>
std::vector<Vec<Real>> predicted_direction(const CurveSamples<Real>& curve);

template <class Real>
struct EpsilonFit {
  Real c_d = Real(0);
  // Sup-norm misfit of the extrapolated B against c_d times the predicted direction, relative.
  Real residual = Real(0);
  // log2 of successive remainder ratios, averaged; about 4 for symmetric nodes.
  Real remainder_order = Real(0);
  std::vector<Vec<Real>> b_extrapolated;
  std::vector<Real> eps;
  std::vector<Real> c_per_eps;
  std::vector<Real> residual_per_eps;
  // sup |L_eps - G - eps^2 c_d P| for each eps.
  std::vector<Real> remainder;
};

// Polynomial (Richardson) extrapolation of (L_eps - G) / eps^2 to eps = 0, in eps^2 when
// `even` and in eps otherwise, then a least-squares fit against the predicted direction.
template <class Real>
EpsilonFit<Real> fit_epsilon2(const CurveSamples<Real>& curve, const std::vector<EnvelopeSamples<Real>>& family,
                              bool even = true, Real max_residual = Real(1e-3));

// u_{j,eps} on the grid for j < d, from the envelope's fundamental system.
template <class Real>
std::vector<Vec<Real>> recover_operator(const EnvelopeSamples<Real>& env, int d);

// Trigonometric interpolation derivative of periodic samples on [0, 2 pi).
template <class Real>
Vec<Real> spectral_derivative(const Vec<Real>& f, int order = 1);

// Right-hand side of the (2,4)-KdV system for d/dx^4 + u d/dx^2 + v d/dx + w.
template <class Real>
std::array<Vec<Real>, 3> kdv24_rhs(const Vec<Real>& u, const Vec<Real>& v, const Vec<Real>& w);

// u[d-1] = 0.3 + 0.1 cos x plus small lower terms; used by the CLI and acceptance checks.
template <class Real>
CurveOperator<Real> test_operator(int d);

}  // namespace pentagram
