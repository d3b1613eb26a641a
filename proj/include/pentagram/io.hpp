#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pentagram/continuum.hpp"
#include "pentagram/spectral.hpp"

namespace pentagram {

// {"d", "n", "vertices", "monodromy"}. Exact entries are "p/q" strings, float entries are numbers.
template <class S>
std::string polygon_to_json(const TwistedPolygon<S>& poly);

// Entries may be "p/q" strings, integer strings or JSON numbers. Numbers read into the exact
// backend keep the exact binary value.
template <class S>
TwistedPolygon<S> polygon_from_json(std::string_view text);

// {"k_power": {"lambda_power": "p/q"}}.
template <class S>
std::string spectral_to_json(const SpectralFunction<S>& r);

// step,I0..Iq,J0..Jq,G0..Gq
template <class S>
void write_integrals_csv(std::ostream& os, const std::vector<Integrals3D<S>>& trace);

// step,i,x,y,z
template <class S>
void write_xyz_csv(std::ostream& os, const std::vector<Xyz3<S>>& trace);

// step,k,c0..cd
template <class S>
void write_vertex_csv(std::ostream& os, const std::vector<TwistedPolygon<S>>& trace);

// x,component,G,L_eps,B_fit,predicted_B with L_eps at env.eps and B_fit the extrapolated eps^2 term.
template <class Real>
void write_continuum_csv(std::ostream& os, const CurveSamples<Real>& curve, const EnvelopeSamples<Real>& env,
                         const EpsilonFit<Real>& fit);

// eps,residual,C_d_estimate
template <class Real>
void write_sweep_csv(std::ostream& os, const EpsilonFit<Real>& fit);

}  // namespace pentagram
