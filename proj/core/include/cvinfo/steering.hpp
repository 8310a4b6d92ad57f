#ifndef CVINFO_STEERING_HPP
#define CVINFO_STEERING_HPP

#include "cvinfo/covariance.hpp"

#include <vector>

namespace cvinfo {

/// "Steerable" means G above this threshold; boundary states (smallest
/// conditional symplectic eigenvalue exactly 1) are unsteerable.
inline constexpr double kSteerableTol = 1e-7;

/// Directional Gaussian steerability of a bipartite CM.
struct SteeringReport {
  std::vector<int> measured;          // steering group (A)
  std::vector<int> steered;           // steered group (B)
  SymplecticSpectrum schur_spectrum;  // spectrum of the conditional CM
  double steerability;                // G^{A->B} >= 0
  bool steerable;                     // G > kSteerableTol
};

/// Reid criterion product E_{B|A} for a CM of two single-mode groups:
/// the product of the optimally gained inferred variances
/// (V_qBqB - V_qAqB^2 / V_qAqA) (V_pBpB - V_pApB^2 / V_pApA).
/// A value below 1 signals A -> B steerability.
double reid_product(const CovarianceMatrix& two_mode);

/// Reid product minimized over local symplectics on both sides:
/// det V_AB / det V_A, the determinant of the Schur complement of the
/// measured block.
double min_reid(const CovarianceMatrix& v, const std::vector<int>& measured);

/// A -> B steerability signal: the Schur complement of the measured block
/// fails the bona fide condition, i.e. its smallest symplectic eigenvalue
/// is < 1 - tol. Necessary and sufficient for steerability of Gaussian
/// states by Gaussian measurements.
bool steering_criterion(const CovarianceMatrix& v,
                        const std::vector<int>& measured,
                        double tol = kSteerableTol);

/// Gaussian steerability G^{A->B} = -sum ln of the sub-unity symplectic
/// eigenvalues of the Schur complement (0 if there are none), with the
/// full conditional spectrum in the report.
SteeringReport gaussian_steerability(const CovarianceMatrix& v,
                                     const std::vector<int>& measured);

/// Log-determinant form of G^{A->B} for a single-mode steered party:
/// max{0, (M_A - M_AB)/2}. Independent evaluation path used to cross-check
/// the spectral formula; rejects multimode steered groups.
double gaussian_steerability_logdet(const CovarianceMatrix& v,
                                    const std::vector<int>& measured);

/// Monogamy of Gaussian steering of a single mode B by groups A and C:
/// the product of conditional determinants
/// det SchurComplement(AB\A) . det SchurComplement(CB\C) is >= 1 (it equals
/// exp of the SSA log-det residual), so G^{A->B} and G^{C->B} cannot both
/// be positive.
struct MonogamyVerdict {
  double g_ab;
  double g_cb;
  double product_of_conditionals;
  bool consistent;
};

/// Requires partition A|B|C with single-mode B.
MonogamyVerdict monogamy_check(const CovarianceMatrix& v, const Partition& p);

/// Four-mode pure family V = S34(a) S12(a) S23(s) S23^T(s) S12^T(a) S34^T(a)
/// acting on the vacuum: det V = 1, symmetric under the mode swap
/// 1 <-> 4, 2 <-> 3.
CovarianceMatrix four_mode_example_cm(double a, double s);

struct JointSteerability {
  double g_ab;
  double g_cb;
};

/// Steerability of the two-mode group B = {2,3} by A = {1} and C = {4} on
/// four_mode_example_cm(a, s). Both directions are equally steerable as
/// soon as a, s > 0: with a two-mode steered party the single-mode
/// monogamy no-go does not apply.
JointSteerability joint_steerability_demo(double a, double s);

}  // namespace cvinfo

#endif  // CVINFO_STEERING_HPP
