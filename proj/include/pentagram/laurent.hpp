#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pentagram/scalar.hpp"

namespace pentagram {

// Finite Laurent series in the spectral parameter lambda. Zero coefficients are never stored,
// so structural equality is mathematical equality for exact scalars.
template <class S>
class LaurentPoly {
 public:
  using Scalar = S;

  LaurentPoly() = default;
  LaurentPoly(const S& c) { set(0, c); }
  static LaurentPoly monomial(const S& c, int exponent);

  const std::map<int, S>& terms() const noexcept { return terms_; }
  S coeff(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;

  S evaluate(const S& lambda) const;
  LaurentPoly derivative() const;
  LaurentPoly shifted(int by) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const S& s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const S& s) { return a *= s; }
  friend LaurentPoly operator*(const S& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return multiply(a, b); }
  LaurentPoly operator-() const { return LaurentPoly{} - *this; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  static LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);
  void set(int exponent, const S& c);
  void add(int exponent, const S& c);

  std::map<int, S> terms_;
};

template <class S>
double max_abs_coeff(const LaurentPoly<S>& p);

// Square matrix of Laurent polynomials.
template <class S>
class PolyMatrix {
 public:
  explicit PolyMatrix(int dim = 0) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {}
  static PolyMatrix identity(int dim);
  static PolyMatrix constant(const Mat<S>& m);

  int dim() const noexcept { return dim_; }
  LaurentPoly<S>& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  const LaurentPoly<S>& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }

  Mat<S> evaluate(const S& lambda) const;
  LaurentPoly<S> determinant() const;
  LaurentPoly<S> trace() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) { return multiply(a, b); }
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) { return combine(a, b, S(1)); }
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return combine(a, b, S(-1)); }
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  static PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
  static PolyMatrix combine(const PolyMatrix& a, const PolyMatrix& b, const S& sign);

  int dim_;
  std::vector<LaurentPoly<S>> entries_;
};

// Largest coefficient magnitude over all entries.
template <class S>
double max_abs_coeff(const PolyMatrix<S>& m);

// det(k Id - T) = sum_i c[i] k^{D-i}, c[0] = 1 (Faddeev-LeVerrier).
template <class S>
std::vector<LaurentPoly<S>> characteristic_coefficients(const PolyMatrix<S>& t);

// j-th exterior power: entries are the j x j minors, rows and columns indexed by increasing
// j-subsets in lexicographic order.
template <class S>
PolyMatrix<S> compound(const PolyMatrix<S>& m, int j);

// det(k Id - T) coefficients for T = L_{n-1} ... L_0, from traces of products of compounds.
// Avoids the cancellation Faddeev-LeVerrier suffers in floating point.
template <class S>
std::vector<LaurentPoly<S>> characteristic_coefficients(const std::vector<PolyMatrix<S>>& factors);

}  // namespace pentagram
