#include "cvinfo/steering.hpp"

#include "cvinfo/entropy.hpp"
#include "cvinfo/symplectic.hpp"

#include <cmath>
#include <stdexcept>

namespace cvinfo {

namespace {

std::vector<int> remaining_modes(int modes, const std::vector<int>& measured) {
  std::vector<bool> in_a(static_cast<std::size_t>(modes) + 1, false);
  for (int m : measured) {
    if (m < 1 || m > modes) {
      throw std::invalid_argument("steering: mode index out of range");
    }
    in_a[static_cast<std::size_t>(m)] = true;
  }
  std::vector<int> rest;
  for (int m = 1; m <= modes; ++m) {
    if (!in_a[static_cast<std::size_t>(m)]) rest.push_back(m);
  }
  if (rest.empty()) {
    throw std::invalid_argument("steering: no steered modes left");
  }
  return rest;
}

}  // namespace

double reid_product(const CovarianceMatrix& two_mode) {
  if (two_mode.modes() != 2) {
    throw std::invalid_argument(
        "reid_product: defined for two single-mode groups");
  }
  const Matrix& v = two_mode.matrix();
  // Optimal linear gains g_q = V_qAqB / V_qAqA, g_p = V_pApB / V_pApA.
  const double inf_q = v(2, 2) - v(0, 2) * v(0, 2) / v(0, 0);
  const double inf_p = v(3, 3) - v(1, 3) * v(1, 3) / v(1, 1);
  return inf_q * inf_p;
}

double min_reid(const CovarianceMatrix& v, const std::vector<int>& measured) {
  remaining_modes(v.modes(), measured);  // validates the cut
  const double m_ab = logdet_entropy(v);
  const double m_a = logdet_entropy(reduce(v, measured));
  return std::exp(m_ab - m_a);
}

bool steering_criterion(const CovarianceMatrix& v,
                        const std::vector<int>& measured, double tol) {
  const CovarianceMatrix conditional = schur_complement(v, measured);
  return symplectic_spectrum(conditional).min() < 1.0 - tol;
}

SteeringReport gaussian_steerability(const CovarianceMatrix& v,
                                     const std::vector<int>& measured) {
  const std::vector<int> steered = remaining_modes(v.modes(), measured);
  const CovarianceMatrix conditional = schur_complement(v, measured);
  SymplecticSpectrum spectrum = symplectic_spectrum(conditional);
  double g = 0.0;
  for (double nu : spectrum.values) {
    if (nu < 1.0) g -= std::log(nu);
  }
  return SteeringReport{measured, steered, std::move(spectrum), g,
                        g > kSteerableTol};
}

double gaussian_steerability_logdet(const CovarianceMatrix& v,
                                    const std::vector<int>& measured) {
  const std::vector<int> steered = remaining_modes(v.modes(), measured);
  if (steered.size() != 1) {
    throw std::invalid_argument(
        "gaussian_steerability_logdet: steered party must be a single mode");
  }
  const double m_a = logdet_entropy(reduce(v, measured));
  const double m_ab = logdet_entropy(v);
  return std::max(0.0, 0.5 * (m_a - m_ab));
}

MonogamyVerdict monogamy_check(const CovarianceMatrix& v, const Partition& p) {
  if (p.size() != 3) {
    throw std::invalid_argument(
        "monogamy_check: partition must have 3 groups");
  }
  p.check_range(v.modes());
  if (p.group(1).size() != 1) {
    throw std::invalid_argument(
        "monogamy_check: steered middle group must be a single mode");
  }

  const double m_ab = logdet_entropy(reduce(v, p.merged({0, 1})));
  const double m_bc = logdet_entropy(reduce(v, p.merged({1, 2})));
  const double m_a = logdet_entropy(reduce(v, p.merged({0})));
  const double m_c = logdet_entropy(reduce(v, p.merged({2})));
  // det Schur(AB\A) . det Schur(CB\C) = exp of the SSA residual.
  const double product = std::exp(m_ab + m_bc - m_a - m_c);

  const CovarianceMatrix v_ab = reduce(v, p.merged({0, 1}));
  const CovarianceMatrix v_cb = reduce(v, p.merged({2, 1}));
  std::vector<int> a_local(p.group(0).size());
  for (std::size_t i = 0; i < a_local.size(); ++i) {
    a_local[i] = static_cast<int>(i) + 1;
  }
  std::vector<int> c_local(p.group(2).size());
  for (std::size_t i = 0; i < c_local.size(); ++i) {
    c_local[i] = static_cast<int>(i) + 1;
  }
  const double g_ab = gaussian_steerability(v_ab, a_local).steerability;
  const double g_cb = gaussian_steerability(v_cb, c_local).steerability;

  const bool consistent = product >= 1.0 - 1e-8 &&
                          !(g_ab > kSteerableTol && g_cb > kSteerableTol);
  return MonogamyVerdict{g_ab, g_cb, product, consistent};
}

CovarianceMatrix four_mode_example_cm(double a, double s) {
  const Matrix s23 = two_mode_squeezer(4, 2, 3, s).matrix();
  const Matrix s12 = two_mode_squeezer(4, 1, 2, a).matrix();
  const Matrix s34 = two_mode_squeezer(4, 3, 4, a).matrix();
  const Matrix chain = s34 * s12 * s23;
  Matrix v = chain * chain.transpose();
  v = 0.5 * (v + v.transpose()).eval();
  return CovarianceMatrix(std::move(v));
}

JointSteerability joint_steerability_demo(double a, double s) {
  const CovarianceMatrix v = four_mode_example_cm(a, s);
  // A = {1}, B = {2,3}, C = {4}; each direction acts on the reduced
  // bipartite CM with the other outer mode traced out.
  const CovarianceMatrix v_ab = reduce(v, {1, 2, 3});
  const CovarianceMatrix v_cb = reduce(v, {2, 3, 4});
  const double g_ab = gaussian_steerability(v_ab, {1}).steerability;
  const double g_cb = gaussian_steerability(v_cb, {3}).steerability;
  return JointSteerability{g_ab, g_cb};
}

}  // namespace cvinfo
