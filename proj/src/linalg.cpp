#include "pentagram/linalg.hpp"

#include <cmath>
#include <utility>

#include "pentagram/error.hpp"

namespace pentagram {

template <class S>
double max_abs(const Mat<S>& a) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(ScalarTraits<S>::to_double(a(i, j))));
  return m;
}

template <class S>
double max_abs(const Vec<S>& a) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) m = std::max(m, std::abs(ScalarTraits<S>::to_double(a(i))));
  return m;
}

namespace {

// Forward elimination shared by echelon and determinant. Returns the sign of
// the row permutation, or 0 when a column lacks a pivot and stop_on_singular.
template <class S>
int eliminate(Mat<S>& m, std::vector<Eigen::Index>& pivots, bool reduce, bool stop_on_singular) {
  const double scale = max_abs(m);
  int sign = 1;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index best = -1;
    if constexpr (is_exact_v<S>) {
      for (Eigen::Index r = row; r < m.rows(); ++r)
        if (!m(r, col).is_zero()) { best = r; break; }
    } else {
      double big = 0.0;
      for (Eigen::Index r = row; r < m.rows(); ++r) {
        const double v = std::abs(m(r, col));
        if (v > big) { big = v; best = r; }
      }
      if (best >= 0 && ScalarTraits<S>::is_zero(m(best, col), scale)) best = -1;
    }
    if (best < 0) {
      if (stop_on_singular) return 0;
      continue;
    }
    if (best != row) {
      m.row(best).swap(m.row(row));
      sign = -sign;
    }
    const S piv = m(row, col);
    const Eigen::Index first = reduce ? 0 : row + 1;
    for (Eigen::Index r = first; r < m.rows(); ++r) {
      if (r == row) continue;
      const S f = m(r, col) / piv;
      if constexpr (is_exact_v<S>) {
        if (f.is_zero()) continue;
      }
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
      m(r, col) = S(0);
    }
    if (reduce) {
      for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) /= piv;
    }
    pivots.push_back(col);
    ++row;
  }
  return sign;
}

}  // namespace

template <class S>
Echelon<S> echelon(const Mat<S>& a) {
  Echelon<S> out{a, {}};
  eliminate(out.reduced, out.pivot_cols, true, false);
  return out;
}

template <class S>
S determinant(const Mat<S>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::ConfigError, "determinant of a non-square matrix");
  if (a.rows() == 0) return S(1);
  Mat<S> m = a;
  std::vector<Eigen::Index> piv;
  const int sign = eliminate(m, piv, false, true);
  if (sign == 0) return S(0);
  S d = S(sign);
  for (Eigen::Index i = 0; i < m.rows(); ++i) d *= m(i, i);
  return d;
}

template <class S>
Eigen::Index rank(const Mat<S>& a) {
  Mat<S> m = a;
  std::vector<Eigen::Index> piv;
  eliminate(m, piv, false, false);
  return static_cast<Eigen::Index>(piv.size());
}

template <class S>
Vec<S> solve(const Mat<S>& a, const Vec<S>& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) throw Error(ErrorKind::ConfigError, "solve: dimension mismatch");
  Mat<S> aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  std::vector<Eigen::Index> piv;
  eliminate(aug, piv, true, false);
  if (static_cast<Eigen::Index>(piv.size()) < n || piv.back() != n - 1)
    throw Error(ErrorKind::SingularMatrix, "linear system is singular");
  return aug.col(n);
}

template <class S>
Mat<S> inverse(const Mat<S>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw Error(ErrorKind::ConfigError, "inverse of a non-square matrix");
  Mat<S> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat<S>::Identity(n, n);
  std::vector<Eigen::Index> piv;
  eliminate(aug, piv, true, false);
  if (static_cast<Eigen::Index>(piv.size()) < n || piv[n - 1] != n - 1)
    throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  return aug.rightCols(n);
}

template <class S>
Mat<S> kernel(const Mat<S>& a) {
  const Echelon<S> e = echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  const Eigen::Index dim = a.cols() - e.rank();
  Mat<S> out = Mat<S>::Zero(a.cols(), dim);
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    out(free, k) = S(1);
    for (Eigen::Index r = 0; r < e.rank(); ++r) out(e.pivot_cols[r], k) = -e.reduced(r, free);
    ++k;
  }
  return out;
}

template <class S>
Mat<S> stack_rows(const std::vector<Vec<S>>& vs) {
  if (vs.empty()) return Mat<S>(0, 0);
  Mat<S> m(static_cast<Eigen::Index>(vs.size()), vs.front().size());
  for (std::size_t i = 0; i < vs.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
  return m;
}

template <class S>
Mat<S> stack_cols(const std::vector<Vec<S>>& vs) {
  if (vs.empty()) return Mat<S>(0, 0);
  Mat<S> m(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vs[i];
  return m;
}

template <class S>
Vec<S> cross(const std::vector<Vec<S>>& vs) {
  const Eigen::Index dim = static_cast<Eigen::Index>(vs.size()) + 1;
  for (const auto& v : vs)
    if (v.size() != dim) throw Error(ErrorKind::ConfigError, "cross: need d vectors of length d+1");
  const Mat<S> rows = stack_rows(vs);
  Vec<S> out(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    Mat<S> minor(dim - 1, dim - 1);
    for (Eigen::Index c = 0, mc = 0; c < dim; ++c) {
      if (c == i) continue;
      minor.col(mc++) = rows.col(c);
    }
    const S m = determinant(minor);
    out(i) = ((dim - 1 + i) % 2 == 0) ? m : S(-m);
  }
  return out;
}

#define PENTAGRAM_INSTANTIATE(S)                                  \
  template struct Echelon<S>;                                     \
  template Echelon<S> echelon<S>(const Mat<S>&);                  \
  template S determinant<S>(const Mat<S>&);                       \
  template Eigen::Index rank<S>(const Mat<S>&);                   \
  template Vec<S> solve<S>(const Mat<S>&, const Vec<S>&);         \
  template Mat<S> inverse<S>(const Mat<S>&);                      \
  template Mat<S> kernel<S>(const Mat<S>&);                       \
  template Vec<S> cross<S>(const std::vector<Vec<S>>&);           \
  template Mat<S> stack_rows<S>(const std::vector<Vec<S>>&);      \
  template Mat<S> stack_cols<S>(const std::vector<Vec<S>>&);      \
  template double max_abs<S>(const Mat<S>&);                      \
  template double max_abs<S>(const Vec<S>&);

PENTAGRAM_INSTANTIATE(Rational)
PENTAGRAM_INSTANTIATE(double)
PENTAGRAM_INSTANTIATE(long double)

}  // namespace pentagram
