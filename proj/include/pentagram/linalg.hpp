#pragma once

#include <vector>

#include "pentagram/scalar.hpp"

namespace pentagram {

// Reduced row echelon form with backend-appropriate pivoting. For floats a
// pivot counts as zero below 1e-12 times the largest entry of the input.
template <class S>
struct Echelon {
  Mat<S> reduced;
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

template <class S>
Echelon<S> echelon(const Mat<S>& a);

template <class S>
S determinant(const Mat<S>& a);

template <class S>
Eigen::Index rank(const Mat<S>& a);

template <class S>
Vec<S> solve(const Mat<S>& a, const Vec<S>& b);

template <class S>
Mat<S> inverse(const Mat<S>& a);

// Columns span the right kernel.
template <class S>
Mat<S> kernel(const Mat<S>& a);

// Generalized cross product of d vectors in dimension d+1, defined by
// cross(v_1..v_d) . w = det[v_1; ...; v_d; w].
template <class S>
Vec<S> cross(const std::vector<Vec<S>>& vs);

template <class S>
Mat<S> stack_rows(const std::vector<Vec<S>>& vs);

template <class S>
Mat<S> stack_cols(const std::vector<Vec<S>>& vs);

// Largest absolute entry as a double; used to scale float thresholds.
template <class S>
double max_abs(const Mat<S>& a);

template <class S>
double max_abs(const Vec<S>& a);

}  // namespace pentagram
