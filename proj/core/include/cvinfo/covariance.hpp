#ifndef CVINFO_COVARIANCE_HPP
#define CVINFO_COVARIANCE_HPP

#include <Eigen/Dense>

#include <vector>

namespace cvinfo {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Symplectic form sigma^{(+)n} with sigma = [[0,1],[-1,0]], one block per
/// mode in (q1,p1,...,qn,pn) ordering. Antisymmetric, omega(n)^2 = -I.
Matrix omega(int modes);

/// Covariance matrix of an n-mode continuous variable state, in
/// vacuum-normalized units (vacuum CM = identity), mode ordering
/// (q1,p1,...,qn,pn).
///
/// Construction accepts any real symmetric positive definite matrix of even
/// dimension; physicality (the uncertainty-principle bound) is a separate
/// check, see is_bona_fide(). Entries asymmetric beyond
/// 1e-12 * max(1,|V_jk|) are rejected; accepted input is symmetrized exactly.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Matrix entries);

  static CovarianceMatrix vacuum(int modes);

  int modes() const noexcept { return modes_; }
  int dim() const noexcept { return 2 * modes_; }
  const Matrix& matrix() const noexcept { return entries_; }

 private:
  Matrix entries_;
  int modes_;
};

/// Symplectic eigenvalues of a CM, sorted descending. For a bona fide CM
/// every value is >= 1; values below 1 are reported as-is (the steering
/// quantifier depends on them).
struct SymplecticSpectrum {
  std::vector<double> values;

  double min() const;
  double max() const;
};

/// Ordered disjoint groups of 1-based mode indices selecting subsystems of a
/// CM. Modes not listed in any group are traced out.
class Partition {
 public:
  explicit Partition(std::vector<std::vector<int>> groups);

  std::size_t size() const noexcept { return groups_.size(); }
  const std::vector<int>& group(std::size_t i) const { return groups_.at(i); }
  const std::vector<std::vector<int>>& groups() const noexcept {
    return groups_;
  }

  /// Concatenation of the selected groups, in group order.
  std::vector<int> merged(std::initializer_list<std::size_t> which) const;

  /// Throws if any index exceeds the mode count.
  void check_range(int modes) const;

 private:
  std::vector<std::vector<int>> groups_;
};

/// Parses the CLI partition syntax: semicolon-separated groups of
/// comma-separated 1-based mode indices, whitespace ignored ("1;2;3,4").
Partition parse_partition(const std::string& text);

/// Symplectic spectrum {nu_j} of a positive definite V. The eigenvalues of
/// -V.Omega.V.Omega are {nu_j^2} with double degeneracy; they are obtained
/// here from the symmetric positive definite matrix
/// V^{1/2} Omega V Omega^T V^{1/2} and collapsed by sorting and pairing
/// adjacent values.
SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& v);

/// Uncertainty-principle check: V is a physical CM iff it is positive
/// definite and its smallest symplectic eigenvalue is >= 1 - tol
/// (equivalent to V + i.Omega >= 0 for positive definite V).
bool is_bona_fide(const CovarianceMatrix& v, double tol = 1e-8);

/// Principal submatrix on the selected modes' (q,p) rows/columns, order
/// preserved. Indices are 1-based.
CovarianceMatrix reduce(const CovarianceMatrix& v,
                        const std::vector<int>& mode_indices);

/// Schur complement of the measured block: V_B - V_off^T V_A^{-1} V_off,
/// where A is the measured group and B the remaining modes. This is the
/// conditional CM of B after optimal Gaussian measurements on A; it is
/// symmetric positive definite but need not be bona fide.
CovarianceMatrix schur_complement(const CovarianceMatrix& v,
                                  const std::vector<int>& measured);

/// Purity of the Gaussian state with CM V: (det V)^{-1/2}, in (0,1] for
/// bona fide V.
double purity(const CovarianceMatrix& v);

namespace detail {

/// ln det of a symmetric positive definite matrix via Cholesky pivots.
/// Throws std::invalid_argument if the factorization fails.
double spd_logdet(const Matrix& m);

/// Quadrature (row/column) indices covered by 1-based mode indices.
std::vector<int> quadrature_indices(const std::vector<int>& mode_indices);

}  // namespace detail

}  // namespace cvinfo

#endif  // CVINFO_COVARIANCE_HPP
