#pragma once

#include <utility>

#include "pentagram/projective.hpp"

namespace pentagram {

// T_{p,r}: stride-p diagonal hyperplanes, intersected d at a time with stride r.
// `centered` places both windows symmetrically around k; for (p, r) = (2, 1)
// this is the higher pentagram map with planes through v_{k-d+1}, ..., v_{k+d-1}.
struct MapParams {
  int p = 2;
  int r = 1;
  bool centered = false;
};

inline constexpr MapParams pentagram_map{2, 1, true};

// Hyperplane through v_k, v_{k+p}, ..., v_{k+(d-1)p}.
template <class S>
Hyperplane<S> p_diagonal(const TwistedPolygon<S>& poly, long k, int p);

// Image vertex k alone. It reads only v_{k+lo}, ..., v_{k+hi} with (lo, hi) = image_support.
template <class S>
Vec<S> image_vertex(const TwistedPolygon<S>& poly, long k, const MapParams& params);

std::pair<long, long> image_support(int d, const MapParams& params);

template <class S>
TwistedPolygon<S> general_map(const TwistedPolygon<S>& poly, const MapParams& params);

// Polygon in the dual space whose j-th vertex is the hyperplane through
// v_j, v_{j+p}, ..., v_{j+(d-1)p} (window shifted back by (d-1)p/2 when centered).
// Its monodromy is M^{-T}.
template <class S>
TwistedPolygon<S> alpha_map(const TwistedPolygon<S>& poly, int p, bool centered = false);

template <class S>
struct ShiftMatch {
  S defect;
  long shift;
};

// Smallest, over integer shifts |s| <= max_shift, of the largest projective distance
// between vertex k of `a` and vertex k+s of `b`. Ties go to the smaller |s|, which
// matters for closed polygons. max_shift < 0 means (d+1) n.
template <class S>
ShiftMatch<S> best_shift(const TwistedPolygon<S>& a, const TwistedPolygon<S>& b, long max_shift = -1);

// Compares T_{r,p}(T_{p,r}(poly)) against every index shift of poly.
template <class S>
ShiftMatch<S> duality_defect(const TwistedPolygon<S>& poly, int p, int r);

}  // namespace pentagram
