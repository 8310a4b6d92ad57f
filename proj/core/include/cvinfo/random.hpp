#ifndef CVINFO_RANDOM_HPP
#define CVINFO_RANDOM_HPP

#include "cvinfo/covariance.hpp"
#include "cvinfo/symplectic.hpp"

#include <cstdint>

namespace cvinfo {

/// Random symplectic S = exp(Omega A) with A symmetric, entries i.i.d.
/// uniform in [-strength, strength]. Deterministic given the seed; the
/// result lies in the identity component of Sp(2n, R).
SymplecticMatrix random_symplectic(int modes, std::uint64_t seed,
                                   double strength = 1.0);

/// Random CM in Williamson form, V = S diag(nu_1,nu_1,...,nu_n,nu_n) S^T,
/// with S = random symplectic and nu_j i.i.d. uniform in [1, nu_max].
/// Bona fide by construction; nu_max = 1 yields a pure-state CM
/// (det V = 1 up to roundoff).
CovarianceMatrix random_cm(int modes, std::uint64_t seed, double nu_max);

}  // namespace cvinfo

#endif  // CVINFO_RANDOM_HPP
