#include "pentagram/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <tuple>

#include <Eigen/LU>
#include <unsupported/Eigen/FFT>

#include "pentagram/error.hpp"

namespace pentagram {

namespace {

// Truncated power series in h; the length is the number of trusted coefficients.
template <class Real>
using Series = std::vector<Real>;

template <class Real>
Series<Real> mul(const Series<Real>& a, const Series<Real>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Series<Real> out(n, Real(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

template <class Real>
Series<Real> reciprocal(const Series<Real>& a) {
  Series<Real> out(a.size(), Real(0));
  out[0] = Real(1) / a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    Real acc(0);
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * out[k - i];
    out[k] = -acc * out[0];
  }
  return out;
}

// a^alpha for a positive constant term, from a g' = alpha a' g.
template <class Real>
Series<Real> power(const Series<Real>& a, Real alpha) {
  Series<Real> out(a.size(), Real(0));
  out[0] = std::pow(a[0], alpha);
  for (std::size_t k = 1; k < a.size(); ++k) {
    Real acc(0);
    for (std::size_t i = 1; i <= k; ++i) acc += (alpha * Real(i) - Real(k - i)) * a[i] * out[k - i];
    out[k] = acc / (Real(k) * a[0]);
  }
  return out;
}

template <class Real>
void axpy(Series<Real>& y, const Series<Real>& factor, const Series<Real>& x) {
  const auto prod = mul(factor, x);
  for (std::size_t k = 0; k < y.size() && k < prod.size(); ++k) y[k] -= prod[k];
  y.resize(std::min(y.size(), prod.size()));
}

// A vector-valued series: column k holds the coefficient of h^k.
template <class Real>
Mat<Real> jet_derivative(const Mat<Real>& jet) {
  Mat<Real> out(jet.rows(), jet.cols() - 1);
  for (Eigen::Index k = 0; k + 1 < jet.cols(); ++k) out.col(k) = Real(k + 1) * jet.col(k + 1);
  return out;
}

template <class Real>
std::vector<std::vector<Series<Real>>> to_table(const std::vector<Mat<Real>>& rows, Eigen::Index order) {
  std::vector<std::vector<Series<Real>>> t(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (Eigen::Index c = 0; c < rows[i].rows(); ++c) {
      Series<Real> s(order);
      for (Eigen::Index k = 0; k < order; ++k) s[k] = rows[i](c, k);
      t[i].push_back(std::move(s));
    }
  return t;
}

// The kernel of d series rows in d+1 unknowns, up to a scalar series factor. Pivots are chosen on
// constant terms, which is Gauss-Jordan elimination with full pivoting at h = 0.
template <class Real>
Mat<Real> kernel_jet(const std::vector<Mat<Real>>& rows, Eigen::Index order) {
  const int r = static_cast<int>(rows.size());
  const int n = r + 1;
  auto t = to_table(rows, order);
  Real scale(0);
  for (const auto& row : t)
    for (const auto& s : row) scale = std::max(scale, std::abs(s[0]));
  std::vector<int> pivot_col(r);
  std::vector<bool> used(n, false);
  for (int step = 0; step < r; ++step) {
    int best_row = -1, best_col = -1;
    Real best(0);
    for (int i = step; i < r; ++i)
      for (int c = 0; c < n; ++c)
        if (!used[c] && std::abs(t[i][c][0]) > best) {
          best = std::abs(t[i][c][0]);
          best_row = i;
          best_col = c;
        }
    if (best_row < 0 || best <= Real(1e-13) * scale)
      throw Error(ErrorKind::KernelDimensionError, "envelope system has a kernel of dimension above one");
    std::swap(t[step], t[best_row]);
    used[best_col] = true;
    pivot_col[step] = best_col;
    const auto inv = reciprocal(t[step][best_col]);
    for (auto& s : t[step]) s = mul(s, inv);
    for (int i = 0; i < r; ++i) {
      if (i == step) continue;
      const auto factor = t[i][best_col];
      for (int c = 0; c < n; ++c) axpy(t[i][c], factor, t[step][c]);
    }
  }
  const int free_col = static_cast<int>(std::find(used.begin(), used.end(), false) - used.begin());
  Mat<Real> out = Mat<Real>::Zero(n, order);
  out(free_col, 0) = Real(1);
  for (int step = 0; step < r; ++step)
    for (Eigen::Index k = 0; k < order && k < static_cast<Eigen::Index>(t[step][free_col].size()); ++k)
      out(pivot_col[step], k) = -t[step][free_col][k];
  return out;
}

// Determinant of a square matrix of series (columns given as jets).
template <class Real>
Series<Real> determinant_jet(const std::vector<Mat<Real>>& cols, Eigen::Index order) {
  auto t = to_table(cols, order);
  const int n = static_cast<int>(t.size());
  Series<Real> det(order, Real(0));
  det[0] = Real(1);
  for (int step = 0; step < n; ++step) {
    int best = step;
    for (int i = step + 1; i < n; ++i)
      if (std::abs(t[i][step][0]) > std::abs(t[best][step][0])) best = i;
    if (t[best][step][0] == Real(0)) throw Error(ErrorKind::IllConditioned, "singular Wronskian matrix");
    if (best != step) {
      std::swap(t[step], t[best]);
      for (auto& c : det) c = -c;
    }
    det = mul(det, t[step][step]);
    const auto inv = reciprocal(t[step][step]);
    for (int i = step + 1; i < n; ++i) {
      const auto factor = mul(t[i][step], inv);
      for (int c = step; c < n; ++c) axpy(t[i][c], factor, t[step][c]);
    }
  }
  return det;
}

// Taylor coefficients g_k = G^{(k)}(x0) / k! of every solution, k < count, from the values of
// G, ..., G^{(d)} at x0 (columns of `derivs`).
template <class Real>
Mat<Real> taylor_at(const CurveOperator<Real>& op, Real x0, const Mat<Real>& derivs, int count) {
  const int d = op.d;
  Mat<Real> g = Mat<Real>::Zero(derivs.rows(), std::max(count, d + 1));
  Real fact(1);
  for (int i = 0; i <= d; ++i) {
    if (i > 0) fact *= Real(i);
    g.col(i) = derivs.col(i) / fact;
  }
  std::vector<std::vector<Real>> ut;
  for (int i = 0; i < d; ++i) ut.push_back(op.u[i].taylor(x0, count));
  for (int k = 0; k + d + 1 < count; ++k) {
    Vec<Real> acc = Vec<Real>::Zero(derivs.rows());
    for (int i = 0; i < d; ++i)
      for (int q = 0; q <= k; ++q) {
        if (ut[i][q] == Real(0)) continue;
        Real falling(1);
        for (int s = 1; s <= i; ++s) falling *= Real(k - q + s);
        acc += ut[i][q] * falling * g.col(k - q + i);
      }
    Real rising(1);
    for (int s = 1; s <= d + 1; ++s) rising *= Real(k + s);
    g.col(k + d + 1) = -acc / rising;
  }
  g.conservativeResize(Eigen::NoChange, count);
  return g;
}

// Columns 0..order of derivatives at x0 + h from Taylor coefficients at x0.
template <class Real>
Mat<Real> derivatives_from_taylor(const Mat<Real>& g, Real h, int order) {
  Mat<Real> out = Mat<Real>::Zero(g.rows(), order + 1);
  for (int i = 0; i <= order; ++i) {
    for (Eigen::Index k = g.cols() - 1; k >= i; --k) {
      Real coeff(1);
      for (int s = 0; s < i; ++s) coeff *= Real(k - s);
      out.col(i) = out.col(i) * h + coeff * g.col(k);
    }
  }
  return out;
}

template <class Real>
Real sup_norm(const std::vector<Vec<Real>>& vs) {
  Real out(0);
  for (const auto& v : vs) out = std::max(out, v.cwiseAbs().maxCoeff());
  return out;
}

// Weights w_j with p(0) = sum_j w_j p(z_j) for polynomials of degree < nodes.
template <class Real>
std::vector<Real> extrapolation_weights(const std::vector<Real>& z) {
  std::vector<Real> w(z.size(), Real(1));
  for (std::size_t j = 0; j < z.size(); ++j)
    for (std::size_t i = 0; i < z.size(); ++i)
      if (i != j) w[j] *= z[i] / (z[i] - z[j]);
  return w;
}

}  // namespace

template <class Real>
Real TrigPoly<Real>::derivative(Real x, int order) const {
  Real out = order == 0 ? constant : Real(0);
  const Real quarter = std::numbers::pi_v<Real> / Real(2) * Real(order);
  for (std::size_t k = 1; k <= std::max(a.size(), b.size()); ++k) {
    const Real kk(static_cast<Real>(k));
    const Real scale = std::pow(kk, Real(order));
    if (k <= a.size()) out += a[k - 1] * scale * std::cos(kk * x + quarter);
    if (k <= b.size()) out += b[k - 1] * scale * std::sin(kk * x + quarter);
  }
  return out;
}

template <class Real>
std::vector<Real> TrigPoly<Real>::taylor(Real x0, int count) const {
  std::vector<Real> out(count, Real(0));
  Real fact(1);
  for (int m = 0; m < count; ++m) {
    if (m > 0) fact *= Real(m);
    out[m] = derivative(x0, m) / fact;
  }
  return out;
}

template <class Real>
Vec<Real> CurveOperator<Real>::sample(int j, int grid) const {
  Vec<Real> out(grid);
  for (int m = 0; m < grid; ++m) out(m) = u[j](Real(2) * std::numbers::pi_v<Real> * Real(m) / Real(grid));
  return out;
}

template <class Real>
Real CurveSamples<Real>::wronskian(int m) const {
  return derivs[m].leftCols(op.d + 1).determinant();
}

template <class Real>
Mat<Real> CurveSamples<Real>::taylor(int m, int count) const {
  return taylor_at(op, x[m], derivs[m], count);
}

template <class Real>
Vec<Real> CurveSamples<Real>::evaluate(Real at, int order) const {
  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  const long turns = static_cast<long>(std::floor(at / two_pi));
  const Real local = at - Real(turns) * two_pi;
  const int n = size();
  const int m = static_cast<int>(std::lround(local / two_pi * Real(n))) % n;
  Real h = local - x[m];
  if (h > std::numbers::pi_v<Real>) h -= two_pi;
  const Mat<Real> g = taylor(m, 40);
  Vec<Real> out = derivatives_from_taylor(g, h, order).col(order);
  Mat<Real> shift = Mat<Real>::Identity(out.size(), out.size());
  const Mat<Real> step = turns >= 0 ? monodromy : Mat<Real>(monodromy.inverse());
  for (long q = 0; q < std::labs(turns); ++q) shift = step * shift;
  return shift * out;
}

template <class Real>
CurveSamples<Real> fundamental_solutions(const CurveOperator<Real>& op, int grid) {
  const int d = op.d;
  if (d < 1 || static_cast<int>(op.u.size()) != d)
    throw Error(ErrorKind::ConfigError, "operator needs d >= 1 and one coefficient per order below d");
  if (grid < 8) throw Error(ErrorKind::ConfigError, "grid needs at least 8 points");
  constexpr int order = 32;
  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  const Real h = two_pi / Real(grid);
  const Real tail_tol = Real(10) * std::numeric_limits<Real>::epsilon();
  CurveSamples<Real> out;
  out.op = op;
  Mat<Real> state = Mat<Real>::Identity(d + 1, d + 1);
  for (int m = 0; m <= grid; ++m) {
    const Real xm = two_pi * Real(m) / Real(grid);
    if (m == grid) {
      out.monodromy = state;
      break;
    }
    out.x.push_back(xm);
    out.derivs.push_back(state);
    int pieces = 1;
    for (;;) {
      const Real sub = h / Real(pieces);
      Mat<Real> s = state;
      bool ok = true;
      for (int p = 0; p < pieces && ok; ++p) {
        const Mat<Real> g = taylor_at(op, xm + sub * Real(p), s, order);
        const Real head = g.leftCols(d + 1).cwiseAbs().maxCoeff();
        const Real tail = g.col(order - 1).cwiseAbs().maxCoeff() * std::pow(sub, Real(order - 1));
        if (tail > tail_tol * head) ok = false;
        s = derivatives_from_taylor(g, sub, d);
      }
      if (ok) {
        state = s;
        break;
      }
      pieces *= 2;
      if (pieces > 1024) throw Error(ErrorKind::StiffnessFailure, "Taylor step control failed", m);
    }
  }
  return out;
}

template <class Real>
std::vector<Real> symmetric_offsets(int d) {
  std::vector<Real> t;
  if (d % 2 == 1) {
    for (int i = -(d / 2); i <= d / 2; ++i) t.push_back(Real(i));
  } else {
    for (int j = d / 2; j >= 1; --j) t.push_back(-Real(2 * j - 1));
    for (int j = 1; j <= d / 2; ++j) t.push_back(Real(2 * j - 1));
  }
  return t;
}

template <class Real>
std::vector<Real> epsilon_grid(int count, Real top) {
  std::vector<Real> out;
  for (int j = 0; j < count; ++j) out.push_back(top / std::pow(Real(2), Real(j)));
  return out;
}

template <class Real>
Real EnvelopeSamples<Real>::wronskian(int m) const {
  const auto d = derivs[m].rows() - 1;
  return derivs[m].leftCols(d + 1).determinant();
}

template <class Real>
EnvelopeSamples<Real> envelope(const CurveSamples<Real>& curve, Real eps, std::vector<Real> offsets) {
  const int d = curve.dim();
  if (offsets.empty()) offsets = symmetric_offsets<Real>(d);
  if (static_cast<int>(offsets.size()) != d) throw Error(ErrorKind::ConfigError, "envelope needs d nodes");
  for (std::size_t i = 0; i < offsets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (offsets[i] == offsets[j]) throw Error(ErrorKind::CoincidentPoints, "envelope nodes coincide", long(i));

  // Jet lengths: L needs d+2 coefficients, its Wronskian costs d, the kernel step costs d-1.
  const int n_w = d + 2;
  const int n_l = n_w + d;
  const int n_h = n_l + d - 1;
  Real spread(0);
  for (const Real t : offsets) spread = std::max(spread, std::abs(t * eps));
  int r_max = 8;
  while (r_max < 120 && std::pow(spread, Real(r_max)) * std::pow(Real(r_max + d), Real(d)) >
                            std::numeric_limits<Real>::epsilon() * Real(1e-4))
    ++r_max;
  const int count = d + r_max + n_h + 1;

  // h_r(t_0..t_m): complete homogeneous symmetric polynomials of the node prefixes.
  std::vector<std::vector<Real>> hom(d, std::vector<Real>(r_max + 1, Real(0)));
  for (int m = 0; m < d; ++m)
    for (int r = 0; r <= r_max; ++r) {
      const Real prev = m > 0 ? hom[m - 1][r] : (r == 0 ? Real(1) : Real(0));
      hom[m][r] = prev + (r > 0 ? offsets[m] * hom[m][r - 1] : Real(0));
    }
  std::vector<std::vector<Real>> binom(count + 1, std::vector<Real>(count + 1, Real(0)));
  for (int i = 0; i <= count; ++i) {
    binom[i][0] = Real(1);
    for (int j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : Real(0));
  }

  EnvelopeSamples<Real> out;
  out.eps = eps;
  out.offsets = offsets;
  for (int m = 0; m < curve.size(); ++m) {
    const Mat<Real> g = curve.taylor(m, count);
    // Divided differences of G(x + t eps) over the node prefixes, scaled by eps^{-m}.
    std::vector<Mat<Real>> spans;
    for (int p = 0; p < d; ++p) {
      Mat<Real> jet = Mat<Real>::Zero(d + 1, n_h);
      Real epow(1);
      for (int r = 0; r <= r_max; ++r) {
        const Real w = epow * hom[p][r];
        if (w != Real(0))
          for (int j = 0; j < n_h; ++j) jet.col(j) += w * binom[p + r + j][j] * g.col(p + r + j);
        epow *= eps;
      }
      spans.push_back(std::move(jet));
    }
    const Mat<Real> plane = kernel_jet(spans, n_h);
    std::vector<Mat<Real>> rows;
    Mat<Real> current = plane;
    for (int j = 0; j < d; ++j) {
      rows.push_back(current.leftCols(n_l));
      current = jet_derivative(current);
    }
    const Mat<Real> raw = kernel_jet(rows, n_l);
    std::vector<Mat<Real>> wcols;
    current = raw;
    for (int j = 0; j <= d; ++j) {
      wcols.push_back(current.leftCols(n_w));
      current = jet_derivative(current);
    }
    auto wr = determinant_jet(wcols, n_w);
    Real sign(1);
    if (d % 2 == 0) {
      sign = wr[0] < Real(0) ? Real(-1) : Real(1);
    } else if (raw.col(0).dot(curve.G(m)) < Real(0)) {
      sign = Real(-1);
    }
    if (wr[0] < Real(0))
      for (auto& c : wr) c = -c;
    const auto factor = power(wr, Real(-1) / Real(d + 1));
    Mat<Real> lj = Mat<Real>::Zero(d + 1, n_w);
    for (int k = 0; k < n_w; ++k)
      for (int i = 0; i <= k; ++i) lj.col(k) += sign * factor[i] * raw.col(k - i);
    Mat<Real> derivs(d + 1, d + 2);
    Real fact(1);
    for (int k = 0; k <= d + 1; ++k) {
      if (k > 0) fact *= Real(k);
      derivs.col(k) = fact * lj.col(k);
    }
    out.derivs.push_back(std::move(derivs));
  }
  return out;
}

template <class Real>
std::vector<Vec<Real>> predicted_direction(const CurveSamples<Real>& curve) {
  const int d = curve.dim();
  if (d < 2) throw Error(ErrorKind::ConfigError, "predicted direction needs d >= 2");
  std::vector<Vec<Real>> out;
  for (int m = 0; m < curve.size(); ++m)
    out.push_back(curve.G(m, 2) + Real(2) / Real(d + 1) * curve.op.u[d - 1](curve.x[m]) * curve.G(m));
  return out;
}

template <class Real>
EpsilonFit<Real> fit_epsilon2(const CurveSamples<Real>& curve, const std::vector<EnvelopeSamples<Real>>& family,
                              bool even, Real max_residual) {
  if (family.size() < 2) throw Error(ErrorKind::ConfigError, "fit needs at least two eps values");
  const auto pred = predicted_direction(curve);
  const int n = curve.size();
  auto fit_against = [&](const std::vector<Vec<Real>>& b) {
    Real num(0), den(0);
    for (int m = 0; m < n; ++m) {
      num += b[m].dot(pred[m]);
      den += pred[m].squaredNorm();
    }
    const Real c = num / den;
    std::vector<Vec<Real>> miss, scaled;
    for (int m = 0; m < n; ++m) {
      miss.push_back(b[m] - c * pred[m]);
      scaled.push_back(c * pred[m]);
    }
    return std::pair<Real, Real>{c, sup_norm(miss) / sup_norm(scaled)};
  };

  EpsilonFit<Real> out;
  std::vector<std::vector<Vec<Real>>> quotients;
  std::vector<Real> nodes;
  for (const auto& env : family) {
    if (static_cast<int>(env.derivs.size()) != n) throw Error(ErrorKind::ConfigError, "envelope grid mismatch");
    std::vector<Vec<Real>> q;
    for (int m = 0; m < n; ++m) q.push_back((env.L(m) - curve.G(m)) / (env.eps * env.eps));
    const auto [c, res] = fit_against(q);
    out.eps.push_back(env.eps);
    out.c_per_eps.push_back(c);
    out.residual_per_eps.push_back(res);
    quotients.push_back(std::move(q));
    nodes.push_back(even ? env.eps * env.eps : env.eps);
  }
  const auto w = extrapolation_weights(nodes);
  for (int m = 0; m < n; ++m) {
    Vec<Real> b = Vec<Real>::Zero(curve.dim() + 1);
    for (std::size_t j = 0; j < w.size(); ++j) b += w[j] * quotients[j][m];
    out.b_extrapolated.push_back(std::move(b));
  }
  std::tie(out.c_d, out.residual) = fit_against(out.b_extrapolated);
  if (!(out.residual <= max_residual))
    throw Error(ErrorKind::PoorConditioning, "eps^2 term is not along the predicted direction");
  for (const auto& env : family) {
    std::vector<Vec<Real>> rem;
    for (int m = 0; m < n; ++m) rem.push_back(env.L(m) - curve.G(m) - env.eps * env.eps * out.c_d * pred[m]);
    out.remainder.push_back(sup_norm(rem));
  }
  Real total(0);
  for (std::size_t j = 0; j + 1 < family.size(); ++j)
    total += std::log(out.remainder[j] / out.remainder[j + 1]) / std::log(std::abs(out.eps[j] / out.eps[j + 1]));
  out.remainder_order = total / Real(family.size() - 1);
  return out;
}

template <class Real>
std::vector<Vec<Real>> recover_operator(const EnvelopeSamples<Real>& env, int d) {
  const int n = static_cast<int>(env.derivs.size());
  std::vector<Vec<Real>> out(d, Vec<Real>(n));
  for (int m = 0; m < n; ++m) {
    const Mat<Real> a = env.derivs[m].leftCols(d + 1);
    const Eigen::PartialPivLU<Mat<Real>> lu(a);
    if (lu.rcond() < Real(1e-12)) throw Error(ErrorKind::IllConditioned, "envelope Wronskian matrix is singular", m);
    const Vec<Real> coeffs = lu.solve(Vec<Real>(-env.derivs[m].col(d + 1)));
    for (int j = 0; j < d; ++j) out[j](m) = coeffs(j);
  }
  return out;
}

template <class Real>
Vec<Real> spectral_derivative(const Vec<Real>& f, int order) {
  const auto n = static_cast<int>(f.size());
  Eigen::FFT<Real> fft;
  std::vector<Real> in(f.data(), f.data() + n);
  std::vector<std::complex<Real>> modes;
  fft.fwd(modes, in);
  // Round-off modes would be amplified by |k|^order; the inputs are low-order trig polynomials.
  Real peak(0);
  for (const auto& c : modes) peak = std::max(peak, std::abs(c));
  for (auto& c : modes)
    if (std::abs(c) <= Real(1e-12) * peak) c = 0;
  for (int k = 0; k < n; ++k) {
    const int freq = k <= n / 2 ? k : k - n;
    if (n % 2 == 0 && k == n / 2 && order % 2 == 1) {
      modes[k] = 0;
      continue;
    }
    std::complex<Real> factor(1);
    for (int i = 0; i < order; ++i) factor *= std::complex<Real>(0, Real(freq));
    modes[k] *= factor;
  }
  std::vector<Real> back;
  fft.inv(back, modes);
  return Eigen::Map<Vec<Real>>(back.data(), n);
}

template <class Real>
std::array<Vec<Real>, 3> kdv24_rhs(const Vec<Real>& u, const Vec<Real>& v, const Vec<Real>& w) {
  if (v.size() != u.size() || w.size() != u.size()) throw Error(ErrorKind::ConfigError, "sample lengths differ");
  const Vec<Real> u1 = spectral_derivative(u, 1), u2 = spectral_derivative(u, 2);
  const Vec<Real> u3 = spectral_derivative(u, 3), u4 = spectral_derivative(u, 4);
  const Vec<Real> v1 = spectral_derivative(v, 1), v2 = spectral_derivative(v, 2);
  const Vec<Real> w1 = spectral_derivative(w, 1), w2 = spectral_derivative(w, 2);
  return {Real(2) * v1 - Real(2) * u2,
          v2 + Real(2) * w1 - u.cwiseProduct(u1) - Real(2) * u3,
          w2 - Real(0.5) * v.cwiseProduct(u1) - Real(0.5) * u.cwiseProduct(u2) - Real(0.5) * u4};
}

template <class Real>
CurveOperator<Real> test_operator(int d) {
  if (d < 1) throw Error(ErrorKind::ConfigError, "operator needs d >= 1");
  CurveOperator<Real> op;
  op.d = d;
  op.u.resize(d);
  op.u[d - 1].constant = Real(0.3);
  op.u[d - 1].a = {Real(0.1)};
  for (int j = 0; j + 1 < d; ++j) {
    if (j % 2 == 0) {
      op.u[j].a = {Real(0), Real(0.04)};
    } else {
      op.u[j].b = {Real(0.05)};
    }
  }
  return op;
}

#define PENTAGRAM_INSTANTIATE(R)                                                                             \
  template struct TrigPoly<R>;                                                                               \
  template struct CurveOperator<R>;                                                                          \
  template struct CurveSamples<R>;                                                                           \
  template struct EnvelopeSamples<R>;                                                                        \
  template CurveSamples<R> fundamental_solutions<R>(const CurveOperator<R>&, int);                           \
  template std::vector<R> symmetric_offsets<R>(int);                                                         \
  template std::vector<R> epsilon_grid<R>(int, R);                                                           \
  template EnvelopeSamples<R> envelope<R>(const CurveSamples<R>&, R, std::vector<R>);                        \
  template std::vector<Vec<R>> predicted_direction<R>(const CurveSamples<R>&);                              \
  template EpsilonFit<R> fit_epsilon2<R>(const CurveSamples<R>&, const std::vector<EnvelopeSamples<R>>&, bool, \
                                         R);                                                                 \
  template std::vector<Vec<R>> recover_operator<R>(const EnvelopeSamples<R>&, int);                         \
  template Vec<R> spectral_derivative<R>(const Vec<R>&, int);                                               \
  template std::array<Vec<R>, 3> kdv24_rhs<R>(const Vec<R>&, const Vec<R>&, const Vec<R>&);                 \
  template CurveOperator<R> test_operator<R>(int);

PENTAGRAM_INSTANTIATE(double)
PENTAGRAM_INSTANTIATE(long double)

}  // namespace pentagram
