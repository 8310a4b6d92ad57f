#include "cvinfo/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace cvinfo {

namespace {

// Eigenvalues within this of 1 are treated as exactly 1 inside the von
// Neumann formula; below the window the CM is not bona fide and is rejected.
constexpr double kNuClampTol = 1e-7;

double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Single-mode von Neumann entropy at symplectic eigenvalue nu >= 1.
double vn_term(double nu) {
  if (nu <= 1.0) return 0.0;
  return xlnx(0.5 * (nu + 1.0)) - xlnx(0.5 * (nu - 1.0));
}

}  // namespace

double logdet_entropy(const CovarianceMatrix& v) {
  return detail::spd_logdet(v.matrix());
}

double renyi2_entropy(const CovarianceMatrix& v) {
  return 0.5 * logdet_entropy(v);
}

double von_neumann_entropy(const CovarianceMatrix& v) {
  const SymplecticSpectrum spectrum = symplectic_spectrum(v);
  double h = 0.0;
  for (double nu : spectrum.values) {
    if (nu < 1.0 - kNuClampTol) {
      throw std::invalid_argument(
          "von_neumann_entropy: CM is not bona fide (symplectic eigenvalue " +
          std::to_string(nu) + " < 1)");
    }
    h += vn_term(nu);
  }
  return h;
}

double sqrt_det_entropy(const CovarianceMatrix& v) {
  return std::exp(0.5 * detail::spd_logdet(v.matrix())) - 1.0;
}

double f_bound(int n_modes, double m) {
  if (n_modes < 1) {
    throw std::invalid_argument("f_bound: n must be >= 1");
  }
  if (m < 0.0) {
    throw std::invalid_argument("f_bound: m must be >= 0");
  }
  if (m == 0.0) return 0.0;

  const double n = static_cast<double>(n_modes);
  const double t = m / n;

  // ln((e^t - 1)/4); expm1 overflows past t ~ 709, where e^{-t} is far
  // below resolution anyway.
  const double term1 =
      t > 350.0 ? t - std::log(4.0) : std::log(std::expm1(t) / 4.0);

  // e^{t/2} ln coth(t/4) = 2 artanh(y)/y with y = e^{-t/2}. For y near 1
  // the atanh argument rounding costs ~eps/(1-y); the log1p/expm1 form
  // keeps full precision there.
  const double y = std::exp(-0.5 * t);
  double term2;
  if (y >= 0.5) {
    const double artanh =
        0.5 * (std::log1p(y) - std::log(-std::expm1(-0.5 * t)));
    term2 = 2.0 * artanh / y;
  } else if (y > 0.0) {
    term2 = 2.0 * std::atanh(y) / y;
  } else {
    term2 = 2.0;  // artanh(y)/y -> 1 as y -> 0
  }

  return 0.5 * n * (term1 + term2);
}

double single_mode_entropy(EntropyKind kind, double invariant) {
  if (invariant < 1.0) {
    throw std::invalid_argument(
        "single_mode_entropy: invariant must be >= 1");
  }
  switch (kind) {
    case EntropyKind::VonNeumann:
      return vn_term(invariant);
    case EntropyKind::LogDet:
      return 2.0 * std::log(invariant);
    case EntropyKind::SqrtDet:
      return invariant - 1.0;
  }
  throw std::invalid_argument("single_mode_entropy: unknown kind");
}

EntropyBoundsResiduals entropy_bounds_residuals(const CovarianceMatrix& v) {
  const double m = logdet_entropy(v);
  const double h = von_neumann_entropy(v);
  // M can come out as a tiny negative for pure states; the bounds need
  // m >= 0.
  const double m_clamped = std::max(0.0, m);
  return EntropyBoundsResiduals{h - f_bound(1, m_clamped),
                                f_bound(v.modes(), m_clamped) - h};
}

}  // namespace cvinfo
