#ifndef CVINFO_SYMPLECTIC_HPP
#define CVINFO_SYMPLECTIC_HPP

#include "cvinfo/covariance.hpp"

namespace cvinfo {

/// True iff ||S.Omega.S^T - Omega||_max <= tol for square S of even
/// dimension.
bool is_symplectic(const Matrix& s, double tol = 1e-9);

/// Real 2n x 2n matrix S with S.Omega.S^T = Omega; acts on CMs as
/// V -> S V S^T. Membership is checked at construction.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(Matrix entries, double tol = 1e-9);

  int modes() const noexcept { return modes_; }
  const Matrix& matrix() const noexcept { return entries_; }

  CovarianceMatrix apply_to(const CovarianceMatrix& v) const;

  /// S S^T, the pure-state CM obtained by acting on the vacuum.
  CovarianceMatrix apply_to_vacuum() const;

 private:
  Matrix entries_;
  int modes_;
};

/// Two-mode squeezing symplectic on modes (i, j) of an n-mode system,
/// 1-based, i < j: identity elsewhere, and on the (i, j) 4x4 block
///
///   [ cosh(r) I2   sinh(r) Z ]
///   [ sinh(r) Z    cosh(r) I2 ],   Z = diag(1, -1).
///
/// Acting on the vacuum this generates the two-mode squeezed vacuum with
/// blocks cosh(2r) I2 and sinh(2r) Z.
SymplecticMatrix two_mode_squeezer(int modes, int mode_i, int mode_j,
                                   double r);

}  // namespace cvinfo

#endif  // CVINFO_SYMPLECTIC_HPP
