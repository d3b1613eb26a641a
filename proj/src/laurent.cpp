#include "pentagram/laurent.hpp"

#include <algorithm>

#include "pentagram/error.hpp"

namespace pentagram {

template <class S>
LaurentPoly<S> LaurentPoly<S>::monomial(const S& c, int exponent) {
  LaurentPoly out;
  out.set(exponent, c);
  return out;
}

template <class S>
void LaurentPoly<S>::set(int exponent, const S& c) {
  if (c == S(0)) {
    terms_.erase(exponent);
  } else {
    terms_[exponent] = c;
  }
}

template <class S>
void LaurentPoly<S>::add(int exponent, const S& c) {
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    if (!(c == S(0))) terms_.emplace(exponent, c);
    return;
  }
  it->second += c;
  if (it->second == S(0)) terms_.erase(it);
}

template <class S>
S LaurentPoly<S>::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? S(0) : it->second;
}

template <class S>
std::optional<int> LaurentPoly<S>::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

template <class S>
std::optional<int> LaurentPoly<S>::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

template <class S>
S LaurentPoly<S>::evaluate(const S& lambda) const {
  S out(0);
  for (const auto& [e, c] : terms_) out += c * ScalarTraits<S>::pow(lambda, e);
  return out;
}

template <class S>
LaurentPoly<S> LaurentPoly<S>::derivative() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_)
    if (e != 0) out.set(e - 1, c * S(e));
  return out;
}

template <class S>
LaurentPoly<S> LaurentPoly<S>::shifted(int by) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
  return out;
}

template <class S>
LaurentPoly<S>& LaurentPoly<S>::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

template <class S>
LaurentPoly<S>& LaurentPoly<S>::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

template <class S>
LaurentPoly<S>& LaurentPoly<S>::operator*=(const S& s) {
  if (s == S(0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

template <class S>
LaurentPoly<S> LaurentPoly<S>::multiply(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  return out;
}

template <class S>
double max_abs_coeff(const LaurentPoly<S>& p) {
  double out = 0.0;
  for (const auto& [e, c] : p.terms()) out = std::max(out, ScalarTraits<S>::to_double(ScalarTraits<S>::abs(c)));
  return out;
}

template <class S>
PolyMatrix<S> PolyMatrix<S>::identity(int dim) {
  PolyMatrix out(dim);
  for (int i = 0; i < dim; ++i) out(i, i) = LaurentPoly<S>(S(1));
  return out;
}

template <class S>
PolyMatrix<S> PolyMatrix<S>::constant(const Mat<S>& m) {
  PolyMatrix out(static_cast<int>(m.rows()));
  for (int i = 0; i < out.dim_; ++i)
    for (int j = 0; j < out.dim_; ++j) out(i, j) = LaurentPoly<S>(m(i, j));
  return out;
}

template <class S>
Mat<S> PolyMatrix<S>::evaluate(const S& lambda) const {
  Mat<S> out(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(i, j) = (*this)(i, j).evaluate(lambda);
  return out;
}

namespace {

// Cofactor expansion along the first remaining row; fine for the sizes used here (<= 8).
template <class S>
LaurentPoly<S> cofactor_det(const PolyMatrix<S>& m, int row, std::vector<int>& cols) {
  if (row == m.dim()) return LaurentPoly<S>(S(1));
  LaurentPoly<S> out;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const int col = cols[idx];
    if (m(row, col).is_zero()) continue;
    std::vector<int> rest = cols;
    rest.erase(rest.begin() + static_cast<long>(idx));
    LaurentPoly<S> term = m(row, col) * cofactor_det(m, row + 1, rest);
    if (idx % 2 == 1) term = -term;
    out += term;
  }
  return out;
}

}  // namespace

template <class S>
LaurentPoly<S> PolyMatrix<S>::determinant() const {
  std::vector<int> cols(dim_);
  for (int j = 0; j < dim_; ++j) cols[j] = j;
  return cofactor_det(*this, 0, cols);
}

template <class S>
LaurentPoly<S> PolyMatrix<S>::trace() const {
  LaurentPoly<S> out;
  for (int i = 0; i < dim_; ++i) out += (*this)(i, i);
  return out;
}

template <class S>
PolyMatrix<S> PolyMatrix<S>::multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorKind::ConfigError, "polynomial matrix size mismatch");
  PolyMatrix out(a.dim_);
  for (int i = 0; i < a.dim_; ++i)
    for (int k = 0; k < a.dim_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < a.dim_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class S>
PolyMatrix<S> PolyMatrix<S>::combine(const PolyMatrix& a, const PolyMatrix& b, const S& sign) {
  if (a.dim_ != b.dim_) throw Error(ErrorKind::ConfigError, "polynomial matrix size mismatch");
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i] * sign;
  return out;
}

template <class S>
double max_abs_coeff(const PolyMatrix<S>& m) {
  double out = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out = std::max(out, max_abs_coeff(m(i, j)));
  return out;
}

template <class S>
std::vector<LaurentPoly<S>> characteristic_coefficients(const PolyMatrix<S>& t) {
  const int dim = t.dim();
  std::vector<LaurentPoly<S>> c{LaurentPoly<S>(S(1))};
  PolyMatrix<S> m(dim);
  for (int k = 1; k <= dim; ++k) {
    PolyMatrix<S> next = t * m;
    for (int i = 0; i < dim; ++i) next(i, i) += c.back();
    m = std::move(next);
    c.push_back((t * m).trace() * (S(-1) / S(k)));
  }
  return c;
}

namespace {

void subsets(int n, int j, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == j) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, j, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

template <class S>
PolyMatrix<S> compound(const PolyMatrix<S>& m, int j) {
  std::vector<std::vector<int>> sets;
  std::vector<int> cur;
  subsets(m.dim(), j, 0, cur, sets);
  PolyMatrix<S> out(static_cast<int>(sets.size()));
  for (std::size_t r = 0; r < sets.size(); ++r)
    for (std::size_t c = 0; c < sets.size(); ++c) {
      PolyMatrix<S> minor(j);
      bool any = false;
      for (int a = 0; a < j; ++a)
        for (int b = 0; b < j; ++b) {
          minor(a, b) = m(sets[r][a], sets[c][b]);
          any = any || !minor(a, b).is_zero();
        }
      if (any) out(static_cast<int>(r), static_cast<int>(c)) = minor.determinant();
    }
  return out;
}

template <class S>
std::vector<LaurentPoly<S>> characteristic_coefficients(const std::vector<PolyMatrix<S>>& factors) {
  if (factors.empty()) throw Error(ErrorKind::ConfigError, "empty matrix product");
  const int dim = factors.front().dim();
  std::vector<LaurentPoly<S>> c{LaurentPoly<S>(S(1))};
  for (int j = 1; j <= dim; ++j) {
    PolyMatrix<S> prod = compound(factors.front(), j);
    for (std::size_t i = 1; i < factors.size(); ++i) prod = compound(factors[i], j) * prod;
    c.push_back(prod.trace() * (j % 2 == 0 ? S(1) : S(-1)));
  }
  return c;
}

#define PENTAGRAM_INSTANTIATE(S)                                                         \
  template class LaurentPoly<S>;                                                         \
  template class PolyMatrix<S>;                                                          \
  template double max_abs_coeff<S>(const LaurentPoly<S>&);                               \
  template double max_abs_coeff<S>(const PolyMatrix<S>&);                                \
  template std::vector<LaurentPoly<S>> characteristic_coefficients<S>(const PolyMatrix<S>&);    \
  template PolyMatrix<S> compound<S>(const PolyMatrix<S>&, int);                                 \
  template std::vector<LaurentPoly<S>> characteristic_coefficients<S>(const std::vector<PolyMatrix<S>>&);

PENTAGRAM_INSTANTIATE(Rational)
PENTAGRAM_INSTANTIATE(double)

}  // namespace pentagram
