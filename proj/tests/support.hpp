#ifndef CVINFO_TESTS_SUPPORT_HPP
#define CVINFO_TESTS_SUPPORT_HPP

#include "cvinfo/covariance.hpp"
#include "cvinfo/symplectic.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <random>
#include <vector>

namespace cvinfo::testing {

// Test-only oracle: symplectic eigenvalues straight from the defining
// nonsymmetric eigenproblem -V.Omega.V.Omega, independent of the
// library's symmetric-eigensolver path. The eigenvalues come in
// degenerate pairs {nu^2, nu^2}; adjacent sorted values are paired.
inline std::vector<double> oracle_spectrum(const Matrix& v) {
  const int n = static_cast<int>(v.rows()) / 2;
  const Matrix w = omega(n);
  const Matrix m = -(v * w * v * w);
  Eigen::EigenSolver<Matrix> es(m);
  std::vector<double> squares(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < 2 * n; ++j) {
    squares[static_cast<std::size_t>(j)] = es.eigenvalues()(j).real();
  }
  std::sort(squares.begin(), squares.end(), std::greater<>());
  std::vector<double> nus(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double pair_mean = 0.5 * (squares[static_cast<std::size_t>(2 * j)] +
                                    squares[static_cast<std::size_t>(2 * j + 1)]);
    nus[static_cast<std::size_t>(j)] = std::sqrt(std::max(0.0, pair_mean));
  }
  return nus;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

inline Matrix random_square(std::mt19937_64& rng, int dim) {
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < dim; ++k) {
      m(j, k) = uniform(rng, -1.0, 1.0);
    }
  }
  return m;
}

inline Matrix random_orthogonal(std::mt19937_64& rng, int dim) {
  Eigen::HouseholderQR<Matrix> qr(random_square(rng, dim));
  return qr.householderQ();
}

// Symmetric PD matrix Q^T diag(u) Q with u in [0.1, 4]; generally fails the
// bona fide condition, which is what the positivity-only suites need.
inline CovarianceMatrix random_pd(std::mt19937_64& rng, int modes) {
  const int dim = 2 * modes;
  const Matrix q = random_orthogonal(rng, dim);
  Vector d(dim);
  for (int j = 0; j < dim; ++j) {
    d(j) = uniform(rng, 0.1, 4.0);
  }
  Matrix m = q.transpose() * d.asDiagonal() * q;
  m = 0.5 * (m + m.transpose()).eval();
  return CovarianceMatrix(std::move(m));
}

// CM of the two-mode squeezed vacuum: blocks cosh(2r) I2 and sinh(2r) Z.
inline CovarianceMatrix tmsv(double r) {
  return two_mode_squeezer(2, 1, 2, r).apply_to_vacuum();
}

// Direct sum, modes concatenated in argument order.
inline CovarianceMatrix direct_sum(const CovarianceMatrix& a,
                                   const CovarianceMatrix& b) {
  Matrix m = Matrix::Zero(a.dim() + b.dim(), a.dim() + b.dim());
  m.topLeftCorner(a.dim(), a.dim()) = a.matrix();
  m.bottomRightCorner(b.dim(), b.dim()) = b.matrix();
  return CovarianceMatrix(std::move(m));
}

}  // namespace cvinfo::testing

#endif  // CVINFO_TESTS_SUPPORT_HPP
