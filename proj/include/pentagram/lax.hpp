#pragma once

#include <vector>

#include "pentagram/coordinates.hpp"
#include "pentagram/laurent.hpp"
#include "pentagram/maps.hpp"

namespace pentagram {

// L_j(lambda) for V_{j+4} = a V_{j+3} + b V_{j+2} + c V_{j+1} - V_j; det = lambda^{-2}.
template <class S>
PolyMatrix<S> lax_abc(const S& a, const S& b, const S& c);

// Companion form L_j^{-1}: first row (0,0,0,-1), subdiagonal (lambda, 1, lambda), last column (c, b, a).
template <class S>
PolyMatrix<S> lax_abc_inverse(const S& a, const S& b, const S& c);

// L~ in (x, y, z) variables; det = 1 / (lambda^2 x^2 y z).
template <class S>
PolyMatrix<S> lax_xyz(const S& x, const S& y, const S& z);

template <class S>
PolyMatrix<S> lax_xyz_inverse(const S& x, const S& y, const S& z);

// P~_i built from the (x, y, z) values around index i.
template <class S>
PolyMatrix<S> p_matrix_xyz(const Xyz3<S>& xyz, long i);

// Inverse of the (d+1)x(d+1) block matrix with top row (0,...,0,(-1)^d), D(lambda) below it and
// the column (a_{j,1}, ..., a_{j,d}). Odd d: D = diag(lambda,1,lambda,...); even d: diag(1,lambda,...).
template <class S>
PolyMatrix<S> lax_general(int d, const std::vector<S>& row);

template <class S>
PolyMatrix<S> lax_general_inverse(int d, const std::vector<S>& row);

template <class S>
std::vector<PolyMatrix<S>> lax_matrices(const Abc3<S>& abc);

template <class S>
std::vector<PolyMatrix<S>> lax_matrices(const Xyz3<S>& xyz);

template <class S>
std::vector<PolyMatrix<S>> lax_matrices(const CoeffSeq<S>& coeffs);

// T_i = L_{i+n-1} ... L_{i+1} L_i with cyclic indices.
template <class S>
PolyMatrix<S> monodromy(const std::vector<PolyMatrix<S>>& lax, long base = 0);

// Largest coefficient of L~_{i,t+1} P~_{i,t} - P~_{i+1,t} L~_{i,t} over i.
template <class S>
S lax_defect(const Xyz3<S>& now, const Xyz3<S>& next);

// lax_defect against explicit_step(xyz).
template <class S>
S verify_lax(const Xyz3<S>& xyz);

// The rescaling a_{j,k} -> s^{e_k} a_{j,k} under which the map is conjecturally invariant.
std::vector<long> scaling_exponents(int d);

template <class S>
CoeffSeq<S> scaling(const CoeffSeq<S>& coeffs, const S& s);

// Largest deviation between T(scaled) and scaled(T) on projective invariants. With
// gcd(n, d+1) = 1 the coefficients are compared; otherwise (x, y, z) for d = 3 and (x, y) for d = 2.
template <class S>
S scaling_invariance_defect(const TwistedPolygon<S>& poly, const S& s, const MapParams& params = pentagram_map);

template <class S>
S scaling_invariance_defect(const CoeffSeq<S>& coeffs, const S& s, const MapParams& params = pentagram_map);

// The corner-coordinate rescaling (x, y) -> (s x, y / s).
template <class S>
Xy2<S> scale_xy2(const Xy2<S>& xy, const S& s);

}  // namespace pentagram
