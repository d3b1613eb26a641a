#pragma once

#include <vector>

#include "pentagram/linalg.hpp"

namespace pentagram {

template <class S>
struct ProjPoint {
  Vec<S> coords;
};

template <class S>
struct Hyperplane {
  Vec<S> covector;
};

struct Tolerance {
  double rel = 1e-9;
};

// 1 - <u,v>^2 / (|u|^2 |v|^2). Exact zero over rationals iff u and v are proportional.
template <class S>
S projective_distance(const Vec<S>& u, const Vec<S>& v);

template <class S>
bool projectively_equal(const Vec<S>& u, const Vec<S>& v, const Tolerance& tol = {});

// One period of vertices plus the monodromy: v_{k+n} = M v_k.
template <class S>
class TwistedPolygon {
 public:
  TwistedPolygon(std::vector<Vec<S>> vertices, Mat<S> monodromy);

  int dim() const noexcept { return d_; }
  int size() const noexcept { return n_; }
  const std::vector<Vec<S>>& vertices() const noexcept { return vertices_; }
  const Mat<S>& monodromy() const noexcept { return monodromy_; }
  const Mat<S>& monodromy_inverse() const noexcept { return monodromy_inv_; }

  // Representative of v_k for any integer k.
  Vec<S> vertex(long k) const;
  ProjPoint<S> point(long k) const { return {vertex(k)}; }

  TwistedPolygon shifted(long s) const;
  TwistedPolygon transformed(const Mat<S>& g) const;

 private:
  int d_;
  int n_;
  std::vector<Vec<S>> vertices_;
  Mat<S> monodromy_;
  Mat<S> monodromy_inv_;
};

// a(j, k-1) = a_{j,k} for j in [0,n), k in [1,d].
template <class S>
struct CoeffSeq {
  int d = 0;
  int n = 0;
  Mat<S> a;

  S operator()(long j, int k) const;
  friend bool operator==(const CoeffSeq& x, const CoeffSeq& y) {
    return x.d == y.d && x.n == y.n && x.a.rows() == y.a.rows() && x.a.cols() == y.a.cols() && x.a == y.a;
  }
};

// V_j = kappa^{1/(d+1)} W_j with unit consecutive determinants and
// V_{j+n} = twist * M V_j. kappa is 1 whenever the backend admits the root.
template <class S>
struct LiftedPolygon {
  int d = 0;
  int n = 0;
  std::vector<Vec<S>> vectors;
  Mat<S> monodromy;
  int twist = 1;
  S kappa = S(1);
  CoeffSeq<S> coeffs;

  Vec<S> vector(long k) const;
  // kappa * det|W_j, ..., W_{j+d}|; equals 1 on a valid lift.
  S normalized_det(long j) const;
  TwistedPolygon<S> polygon() const;
};

template <class S>
LiftedPolygon<S> lift_polygon(const TwistedPolygon<S>& poly, const Tolerance& tol = {}, int twist = 1);

template <class S>
CoeffSeq<S> coefficients_from_lift(const LiftedPolygon<S>& lift, const Tolerance& tol = {});

template <class S>
LiftedPolygon<S> reconstruct_from_coeffs(const CoeffSeq<S>& coeffs, const Tolerance& tol = {});

// Convenience: lift then read off the coefficients.
template <class S>
CoeffSeq<S> coefficients(const TwistedPolygon<S>& poly, const Tolerance& tol = {});

template <class S>
Hyperplane<S> hyperplane_span(const std::vector<ProjPoint<S>>& points);

template <class S>
ProjPoint<S> intersect(const std::vector<Hyperplane<S>>& planes);

// (l2 m1 - l1 m2) / (l2 m1) where p3 = l1 p1 + l2 p2 and p4 = m1 p1 + m2 p2.
template <class S>
S cross_ratio(const ProjPoint<S>& p1, const ProjPoint<S>& p2, const ProjPoint<S>& p3,
              const ProjPoint<S>& p4, const Tolerance& tol = {});

long positive_mod(long k, long n);

}  // namespace pentagram
