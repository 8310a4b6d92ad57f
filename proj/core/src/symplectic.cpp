#include "cvinfo/symplectic.hpp"

#include <cmath>
#include <stdexcept>

namespace cvinfo {

bool is_symplectic(const Matrix& s, double tol) {
  if (s.rows() != s.cols() || s.rows() == 0 || s.rows() % 2 != 0) {
    throw std::invalid_argument(
        "is_symplectic: matrix must be square with even dimension");
  }
  const Matrix w = omega(static_cast<int>(s.rows()) / 2);
  const double defect = (s * w * s.transpose() - w).cwiseAbs().maxCoeff();
  return defect <= tol;
}

SymplecticMatrix::SymplecticMatrix(Matrix entries, double tol) {
  if (!is_symplectic(entries, tol)) {
    throw std::invalid_argument(
        "SymplecticMatrix: S.Omega.S^T - Omega exceeds tolerance");
  }
  modes_ = static_cast<int>(entries.rows()) / 2;
  entries_ = std::move(entries);
}

CovarianceMatrix SymplecticMatrix::apply_to(const CovarianceMatrix& v) const {
  if (v.modes() != modes_) {
    throw std::invalid_argument("SymplecticMatrix: mode count mismatch");
  }
  Matrix out = entries_ * v.matrix() * entries_.transpose();
  out = 0.5 * (out + out.transpose()).eval();
  return CovarianceMatrix(std::move(out));
}

CovarianceMatrix SymplecticMatrix::apply_to_vacuum() const {
  Matrix out = entries_ * entries_.transpose();
  out = 0.5 * (out + out.transpose()).eval();
  return CovarianceMatrix(std::move(out));
}

SymplecticMatrix two_mode_squeezer(int modes, int mode_i, int mode_j,
                                   double r) {
  if (modes < 2) {
    throw std::invalid_argument("two_mode_squeezer: needs at least 2 modes");
  }
  if (mode_i < 1 || mode_j < 1 || mode_i > modes || mode_j > modes) {
    throw std::invalid_argument("two_mode_squeezer: mode index out of range");
  }
  if (mode_i >= mode_j) {
    throw std::invalid_argument("two_mode_squeezer: requires i < j");
  }
  Matrix s = Matrix::Identity(2 * modes, 2 * modes);
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  const int qi = 2 * (mode_i - 1);
  const int qj = 2 * (mode_j - 1);
  s(qi, qi) = ch;
  s(qi + 1, qi + 1) = ch;
  s(qj, qj) = ch;
  s(qj + 1, qj + 1) = ch;
  // Off-diagonal blocks sinh(r) Z, Z = diag(1,-1).
  s(qi, qj) = sh;
  s(qi + 1, qj + 1) = -sh;
  s(qj, qi) = sh;
  s(qj + 1, qi + 1) = -sh;
  return SymplecticMatrix(std::move(s), 1e-12);
}

}  // namespace cvinfo
