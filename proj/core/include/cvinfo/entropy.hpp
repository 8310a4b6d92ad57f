#ifndef CVINFO_ENTROPY_HPP
#define CVINFO_ENTROPY_HPP

#include "cvinfo/covariance.hpp"

namespace cvinfo {

/// The three entropy-like functionals on CMs. Natural logarithm throughout.
enum class EntropyKind { VonNeumann, LogDet, SqrtDet };

/// M(V) = ln det V, computed from Cholesky pivots. Nonnegative for bona
/// fide V.
double logdet_entropy(const CovarianceMatrix& v);

/// Renyi-2 entropy of the Gaussian state with CM V: M(V)/2 = -ln purity(V).
double renyi2_entropy(const CovarianceMatrix& v);

/// Von Neumann entropy of the Gaussian state with CM V,
///
///   H(V) = sum_j (nu_j+1)/2 ln((nu_j+1)/2) - (nu_j-1)/2 ln((nu_j-1)/2),
///
/// over the symplectic spectrum. Requires a bona fide CM: eigenvalues in
/// [1 - 1e-7, 1) are clamped to 1 (the nu = 1 term is 0 as a limit),
/// anything lower is rejected.
double von_neumann_entropy(const CovarianceMatrix& v);

/// D(V) = sqrt(det V) - 1. Defined for any positive definite matrix,
/// nonnegative for bona fide V.
double sqrt_det_entropy(const CovarianceMatrix& v);

/// Bound function relating H and M for n-mode Gaussian states,
///
///   f_n(m) = (n/2) [ ln((e^{m/n}-1)/4) + e^{m/2n} ln coth(m/4n) ],
///
/// extended continuously by f_n(0) = 0. Monotone increasing in m and n,
/// concave and subadditive in m; f_1(M) <= H <= f_n(M) with equality of
/// both bounds at n = 1. The two terms diverge individually as m -> 0;
/// evaluation here is cancellation-safe for all m >= 0.
double f_bound(int n_modes, double m);

/// Single-mode entropy as a function of the symplectic invariant
/// x = sqrt(det V) >= 1 (the one symplectic eigenvalue):
/// H -> von Neumann at nu = x (= f_1(2 ln x)), M -> 2 ln x, D -> x - 1.
double single_mode_entropy(EntropyKind kind, double invariant);

struct EntropyBoundsResiduals {
  double lower_slack;  // H - f_1(M)
  double upper_slack;  // f_n(M) - H
};

/// Slacks of the two-sided bound f_1(M) <= H <= f_n(M); both are
/// nonnegative up to roundoff for every bona fide CM, and both vanish for
/// single-mode states.
EntropyBoundsResiduals entropy_bounds_residuals(const CovarianceMatrix& v);

}  // namespace cvinfo

#endif  // CVINFO_ENTROPY_HPP
