#include "pentagram/io.hpp"

#include <json.hpp>
#include <ostream>

#include "pentagram/error.hpp"

namespace pentagram {

namespace {

using nlohmann::json;

template <class S>
json scalar_json(const S& x) {
  if constexpr (is_exact_v<S>) {
    return x.to_string();
  } else {
    return static_cast<double>(x);
  }
}

template <class S>
S scalar_from(const json& j) {
  if (j.is_string()) return ScalarTraits<S>::parse(j.get<std::string>());
  if (j.is_number_integer()) return S(j.get<long>());
  if (j.is_number()) {
    if constexpr (is_exact_v<S>) {
      return Rational(mpq_class(j.get<double>()));
    } else {
      return static_cast<S>(j.get<double>());
    }
  }
  throw Error(ErrorKind::ParseError, "expected a number or a \"p/q\" string, got " + j.dump());
}

template <class S>
json row_json(const Vec<S>& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(scalar_json(v(i)));
  return out;
}

template <class S>
std::string cell(const S& x) {
  return ScalarTraits<S>::to_string(x);
}

}  // namespace

template <class S>
std::string polygon_to_json(const TwistedPolygon<S>& poly) {
  json out;
  out["d"] = poly.dim();
  out["n"] = poly.size();
  out["vertices"] = json::array();
  for (const auto& v : poly.vertices()) out["vertices"].push_back(row_json(v));
  out["monodromy"] = json::array();
  for (Eigen::Index i = 0; i < poly.monodromy().rows(); ++i)
    out["monodromy"].push_back(row_json<S>(poly.monodromy().row(i).transpose()));
  return out.dump(2) + "\n";
}

template <class S>
TwistedPolygon<S> polygon_from_json(std::string_view text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("polygon JSON: ") + e.what());
  }
  try {
    const int d = in.at("d").get<int>();
    const int n = in.at("n").get<int>();
    const auto& verts = in.at("vertices");
    if (d < 1 || n < 1 || static_cast<int>(verts.size()) != n)
      throw Error(ErrorKind::ParseError, "polygon JSON: vertex count does not match n");
    std::vector<Vec<S>> vs;
    for (const auto& row : verts) {
      if (static_cast<int>(row.size()) != d + 1)
        throw Error(ErrorKind::ParseError, "polygon JSON: vertex needs d+1 coordinates", long(vs.size()));
      Vec<S> v(d + 1);
      for (int i = 0; i <= d; ++i) v(i) = scalar_from<S>(row[i]);
      vs.push_back(std::move(v));
    }
    Mat<S> m = Mat<S>::Identity(d + 1, d + 1);
    if (in.contains("monodromy")) {
      const auto& rows = in.at("monodromy");
      if (static_cast<int>(rows.size()) != d + 1) throw Error(ErrorKind::ParseError, "polygon JSON: monodromy shape");
      for (int i = 0; i <= d; ++i) {
        if (static_cast<int>(rows[i].size()) != d + 1)
          throw Error(ErrorKind::ParseError, "polygon JSON: monodromy shape", i);
        for (int j = 0; j <= d; ++j) m(i, j) = scalar_from<S>(rows[i][j]);
      }
    }
    return TwistedPolygon<S>(std::move(vs), std::move(m));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("polygon JSON: ") + e.what());
  }
}

template <class S>
std::string spectral_to_json(const SpectralFunction<S>& r) {
  json out = json::object();
  for (int k = 0; k <= r.k_degree(); ++k) {
    json row = json::object();
    for (const auto& [e, c] : r.k_coeffs[k].terms()) row[std::to_string(e)] = cell(c);
    out[std::to_string(k)] = std::move(row);
  }
  return out.dump(2) + "\n";
}

template <class S>
void write_integrals_csv(std::ostream& os, const std::vector<Integrals3D<S>>& trace) {
  if (trace.empty()) return;
  const std::size_t q = trace.front().I.size();
  os << "step";
  for (const char* name : {"I", "J", "G"})
    for (std::size_t j = 0; j < q; ++j) os << ',' << name << j;
  os << '\n';
  for (std::size_t step = 0; step < trace.size(); ++step) {
    os << step;
    for (const auto* part : {&trace[step].I, &trace[step].J, &trace[step].G})
      for (const auto& v : *part) os << ',' << cell(v);
    os << '\n';
  }
}

template <class S>
void write_xyz_csv(std::ostream& os, const std::vector<Xyz3<S>>& trace) {
  os << "step,i,x,y,z\n";
  for (std::size_t step = 0; step < trace.size(); ++step)
    for (int i = 0; i < trace[step].size(); ++i)
      os << step << ',' << i << ',' << cell(trace[step].x[i]) << ',' << cell(trace[step].y[i]) << ','
         << cell(trace[step].z[i]) << '\n';
}

template <class S>
void write_vertex_csv(std::ostream& os, const std::vector<TwistedPolygon<S>>& trace) {
  if (trace.empty()) return;
  os << "step,k";
  for (int i = 0; i <= trace.front().dim(); ++i) os << ",c" << i;
  os << '\n';
  for (std::size_t step = 0; step < trace.size(); ++step)
    for (int k = 0; k < trace[step].size(); ++k) {
      os << step << ',' << k;
      const auto& v = trace[step].vertices()[k];
      for (Eigen::Index i = 0; i < v.size(); ++i) os << ',' << cell(v(i));
      os << '\n';
    }
}

template <class Real>
void write_continuum_csv(std::ostream& os, const CurveSamples<Real>& curve, const EnvelopeSamples<Real>& env,
                         const EpsilonFit<Real>& fit) {
  const auto predicted = predicted_direction(curve);
  os << "x,component,G,L_eps,B_fit,predicted_B\n";
  for (int m = 0; m < curve.size(); ++m) {
    const Vec<Real> g = curve.G(m), l = env.L(m);
    for (Eigen::Index a = 0; a < g.size(); ++a)
      os << cell(curve.x[m]) << ',' << a << ',' << cell(g(a)) << ',' << cell(l(a)) << ','
         << cell(fit.b_extrapolated[m](a)) << ',' << cell(Real(fit.c_d * predicted[m](a))) << '\n';
  }
}

template <class Real>
void write_sweep_csv(std::ostream& os, const EpsilonFit<Real>& fit) {
  os << "eps,residual,C_d_estimate\n";
  for (std::size_t j = 0; j < fit.eps.size(); ++j)
    os << cell(fit.eps[j]) << ',' << cell(fit.residual_per_eps[j]) << ',' << cell(fit.c_per_eps[j]) << '\n';
}

#define PENTAGRAM_INSTANTIATE(S)                                                     \
  template std::string polygon_to_json<S>(const TwistedPolygon<S>&);                 \
  template TwistedPolygon<S> polygon_from_json<S>(std::string_view);                 \
  template std::string spectral_to_json<S>(const SpectralFunction<S>&);              \
  template void write_integrals_csv<S>(std::ostream&, const std::vector<Integrals3D<S>>&); \
  template void write_xyz_csv<S>(std::ostream&, const std::vector<Xyz3<S>>&);        \
  template void write_vertex_csv<S>(std::ostream&, const std::vector<TwistedPolygon<S>>&);

PENTAGRAM_INSTANTIATE(Rational)
PENTAGRAM_INSTANTIATE(double)
#undef PENTAGRAM_INSTANTIATE

#define PENTAGRAM_INSTANTIATE(R)                                                                          \
  template void write_continuum_csv<R>(std::ostream&, const CurveSamples<R>&, const EnvelopeSamples<R>&, \
                                       const EpsilonFit<R>&);                                             \
  template void write_sweep_csv<R>(std::ostream&, const EpsilonFit<R>&);

PENTAGRAM_INSTANTIATE(double)
PENTAGRAM_INSTANTIATE(long double)

}  // namespace pentagram
