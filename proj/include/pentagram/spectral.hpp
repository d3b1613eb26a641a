#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pentagram/lax.hpp"

namespace pentagram {

// R(lambda, k) = det(T(lambda) - k Id) = sum_m k_coeffs[m] k^m.
// For (x, y, z) input whose I_0 has no root in the backend, R~ = det(T~ - k Id) is kept instead
// (normalized = false); R(lambda, k) = R~(lambda, k I_0) / I_0^4. i0_fourth holds
// 1 / prod(x^2 y z) for unnormalized functions and 1 otherwise.
template <class S>
struct SpectralFunction {
  int n = 0;
  std::vector<LaurentPoly<S>> k_coeffs;
  bool normalized = true;
  S i0_fourth = S(1);
  bool branch_ambiguity = false;

  int k_degree() const noexcept { return static_cast<int>(k_coeffs.size()) - 1; }
  S evaluate(const S& lambda, const S& k) const;
  // d^a/dk^a d^b/dlambda^b R at (lambda, k).
  S partial(int a, int b, const S& lambda, const S& k) const;
  friend bool operator==(const SpectralFunction&, const SpectralFunction&) = default;
};

template <class S>
SpectralFunction<S> spectral_function(const PolyMatrix<S>& t, int n);

template <class S>
SpectralFunction<S> spectral_function(const Abc3<S>& abc);

// i0_hint, when given, must satisfy hint^4 = 1 / prod(x^2 y z) and fixes the branch.
template <class S>
SpectralFunction<S> spectral_function(const Xyz3<S>& xyz, const std::optional<S>& i0_hint = std::nullopt);

// Any d: monodromy of lax_general.
template <class S>
SpectralFunction<S> spectral_function(const CoeffSeq<S>& coeffs);

// d = 3: (a, b, c) for odd n, (x, y, z) otherwise.
template <class S>
SpectralFunction<S> spectral_function(const TwistedPolygon<S>& poly);

template <class S>
struct Integrals3D {
  std::vector<S> I, J, G;
  bool normalized = true;
  friend bool operator==(const Integrals3D&, const Integrals3D&) = default;
};

// I_j at k^1 lambda^{j-2n}, J_j at k^2 lambda^{j-q-n}, G_j at k^3 lambda^{j-n}, q = n / 2.
// Unnormalized input yields I_0^3 I_j, I_0^2 J_j and I_0 G_j.
template <class S>
Integrals3D<S> extract_integrals(const SpectralFunction<S>& r);

// Necklace representatives (lexicographically least rotation) of admissible codes.
std::vector<std::string> admissible_codes(int n, int weight);

template <class S>
std::pair<S, S> code_integrals(const Abc3<S>& abc, int weight);

struct BranchCensus {
  int nu_finite = 0;
  int nu = 0;
  int genus = 0;
  bool squarefree = true;
  int lambda_valuation = 0;
};

// Coefficients (ascending powers of lambda) of Disc_k(lambda^{2n} R).
std::vector<Rational> discriminant_in_lambda(const SpectralFunction<Rational>& r);

// Res_k(P, dP/dk) at a fixed lambda through the Sylvester determinant; independent check.
Rational sylvester_resultant_at(const SpectralFunction<Rational>& r, const Rational& lambda);

// Throws NonGeneric when strict and the stripped discriminant has a repeated factor.
BranchCensus finite_branch_count(const SpectralFunction<Rational>& r, bool strict = true);

template <class S>
struct ClosedResiduals {
  // R, R_k, R_l, R_kk, R_ll, R_kl, R_kkk, R_lll, R_kkl, R_kll at (1, +1) and (1, -1).
  std::array<S, 10> plus{}, minus{};
  // R - (s R_k - R_kk / 2 + s R_kkk / 6) at (1, s); vanishes for every twisted polygon.
  S identity_plus = S(0), identity_minus = S(0);
};

template <class S>
ClosedResiduals<S> closedness_residuals(const SpectralFunction<S>& r);

// R - (s R_k - R_kk / 2 + s R_kkk / 6) at (1, +1) and (1, -1) from the k-coefficients alone.
// Also works for unnormalized R~: only the k^0 and k^4 coefficients carry weight at k = +-1,
// and their I_0 powers are rational.
template <class S>
std::pair<S, S> dependency_identity(const SpectralFunction<S>& r);

template <class S>
ClosedResiduals<S> closedness_residuals(const TwistedPolygon<S>& poly);

// Rows: the ten derivative conditions at (1, sign); columns: I_0..I_q, J_0..J_q, G_0..G_q.
// The constant part goes to the returned vector.
std::pair<Mat<Rational>, Vec<Rational>> closed_condition_system(int n, int sign);

}  // namespace pentagram
