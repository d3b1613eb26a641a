#include "pentagram/maps.hpp"

#include <algorithm>
#include <optional>

#include "pentagram/error.hpp"

namespace pentagram {

namespace {

long window_start(int d, int stride, bool centered) { return centered ? -((d - 1) * stride) / 2 : 0; }

void check_strides(int p, int r) {
  if (p < 1 || r < 1) throw Error(ErrorKind::ConfigError, "map strides p and r must be positive");
}

}  // namespace

template <class S>
Hyperplane<S> p_diagonal(const TwistedPolygon<S>& poly, long k, int p) {
  check_strides(p, 1);
  std::vector<ProjPoint<S>> pts;
  for (int i = 0; i < poly.dim(); ++i) pts.push_back(poly.point(k + static_cast<long>(i) * p));
  try {
    return hyperplane_span(pts);
  } catch (const Error& e) {
    throw Error(e.kind(), "p-diagonal vertices do not span a hyperplane", k);
  }
}

template <class S>
Vec<S> image_vertex(const TwistedPolygon<S>& poly, long k, const MapParams& params) {
  check_strides(params.p, params.r);
  const int d = poly.dim();
  const long off = window_start(d, params.p, params.centered) + window_start(d, params.r, params.centered);
  std::vector<Hyperplane<S>> planes;
  for (int i = 0; i < d; ++i) planes.push_back(p_diagonal(poly, k + off + i * params.r, params.p));
  try {
    return intersect(planes).coords;
  } catch (const Error&) {
    throw Error(ErrorKind::DegenerateIntersection, "diagonal hyperplanes do not meet in a point", k);
  }
}

std::pair<long, long> image_support(int d, const MapParams& params) {
  check_strides(params.p, params.r);
  const long lo = window_start(d, params.p, params.centered) + window_start(d, params.r, params.centered);
  return {lo, lo + static_cast<long>(d - 1) * (params.p + params.r)};
}

template <class S>
TwistedPolygon<S> general_map(const TwistedPolygon<S>& poly, const MapParams& params) {
  std::vector<Vec<S>> out;
  out.reserve(poly.size());
  for (long k = 0; k < poly.size(); ++k) out.push_back(image_vertex(poly, k, params));
  return TwistedPolygon<S>(std::move(out), poly.monodromy());
}

template <class S>
TwistedPolygon<S> alpha_map(const TwistedPolygon<S>& poly, int p, bool centered) {
  check_strides(p, 1);
  const long off = window_start(poly.dim(), p, centered);
  std::vector<Vec<S>> out;
  out.reserve(poly.size());
  for (long j = 0; j < poly.size(); ++j) out.push_back(p_diagonal(poly, j + off, p).covector);
  return TwistedPolygon<S>(std::move(out), poly.monodromy_inverse().transpose());
}

template <class S>
ShiftMatch<S> best_shift(const TwistedPolygon<S>& a, const TwistedPolygon<S>& b, long max_shift) {
  const int n = a.size();
  if (b.size() != n || b.dim() != a.dim()) throw Error(ErrorKind::ConfigError, "polygons differ in size or dimension");
  if (max_shift < 0) max_shift = static_cast<long>(a.dim() + 1) * n;
  std::optional<ShiftMatch<S>> best;
  for (long m = 0; m <= 2 * max_shift; ++m) {
    const long s = m % 2 == 0 ? m / 2 : -(m + 1) / 2;
    S worst = S(0);
    for (long k = 0; k < n; ++k) worst = std::max(worst, ScalarTraits<S>::abs(projective_distance(a.vertex(k), b.vertex(k + s))));
    if (!best || worst < best->defect) best = ShiftMatch<S>{worst, s};
    if (best->defect == S(0)) break;
  }
  return *best;
}

template <class S>
ShiftMatch<S> duality_defect(const TwistedPolygon<S>& poly, int p, int r) {
  const auto image = general_map(poly, MapParams{p, r, false});
  const auto back = general_map(image, MapParams{r, p, false});
  return best_shift(back, poly);
}

#define PENTAGRAM_INSTANTIATE(S)                                                              \
  template Hyperplane<S> p_diagonal<S>(const TwistedPolygon<S>&, long, int);                 \
  template Vec<S> image_vertex<S>(const TwistedPolygon<S>&, long, const MapParams&);                \
  template TwistedPolygon<S> general_map<S>(const TwistedPolygon<S>&, const MapParams&);     \
  template TwistedPolygon<S> alpha_map<S>(const TwistedPolygon<S>&, int, bool);              \
  template struct ShiftMatch<S>;                                                             \
  template ShiftMatch<S> best_shift<S>(const TwistedPolygon<S>&, const TwistedPolygon<S>&, long);\
  template ShiftMatch<S> duality_defect<S>(const TwistedPolygon<S>&, int, int);

PENTAGRAM_INSTANTIATE(Rational)
PENTAGRAM_INSTANTIATE(double)

}  // namespace pentagram
