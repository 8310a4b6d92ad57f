#include "cvinfo/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cvinfo {

namespace {

constexpr double kSymmetryTol = 1e-12;

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Matrix omega(int modes) {
  require(modes >= 1, "omega: mode count must be >= 1");
  Matrix w = Matrix::Zero(2 * modes, 2 * modes);
  for (int k = 0; k < modes; ++k) {
    w(2 * k, 2 * k + 1) = 1.0;
    w(2 * k + 1, 2 * k) = -1.0;
  }
  return w;
}

CovarianceMatrix::CovarianceMatrix(Matrix entries) {
  require(entries.rows() == entries.cols(),
          "CovarianceMatrix: matrix must be square");
  require(entries.rows() > 0 && entries.rows() % 2 == 0,
          "CovarianceMatrix: dimension must be a positive even number");
  for (Eigen::Index j = 0; j < entries.rows(); ++j) {
    for (Eigen::Index k = j + 1; k < entries.cols(); ++k) {
      const double gap = std::abs(entries(j, k) - entries(k, j));
      if (gap > kSymmetryTol * std::max(1.0, std::abs(entries(j, k)))) {
        std::ostringstream msg;
        msg << "CovarianceMatrix: entries (" << j << "," << k
            << ") asymmetric by " << gap;
        throw std::invalid_argument(msg.str());
      }
    }
  }
  entries_ = 0.5 * (entries + entries.transpose()).eval();
  modes_ = static_cast<int>(entries_.rows()) / 2;
  Eigen::LLT<Matrix> llt(entries_);
  require(llt.info() == Eigen::Success,
          "CovarianceMatrix: matrix is not positive definite");
}

CovarianceMatrix CovarianceMatrix::vacuum(int modes) {
  require(modes >= 1, "vacuum: mode count must be >= 1");
  return CovarianceMatrix(Matrix::Identity(2 * modes, 2 * modes));
}

double SymplecticSpectrum::min() const {
  require(!values.empty(), "SymplecticSpectrum: empty spectrum");
  return values.back();
}

double SymplecticSpectrum::max() const {
  require(!values.empty(), "SymplecticSpectrum: empty spectrum");
  return values.front();
}

Partition::Partition(std::vector<std::vector<int>> groups)
    : groups_(std::move(groups)) {
  require(!groups_.empty(), "Partition: needs at least one group");
  std::vector<int> seen;
  for (const auto& g : groups_) {
    require(!g.empty(), "Partition: groups must be nonempty");
    for (int idx : g) {
      require(idx >= 1, "Partition: mode indices are 1-based");
      require(std::find(seen.begin(), seen.end(), idx) == seen.end(),
              "Partition: groups must be disjoint");
      seen.push_back(idx);
    }
  }
}

std::vector<int> Partition::merged(
    std::initializer_list<std::size_t> which) const {
  std::vector<int> out;
  for (std::size_t i : which) {
    const auto& g = groups_.at(i);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

void Partition::check_range(int modes) const {
  for (const auto& g : groups_) {
    for (int idx : g) {
      if (idx > modes) {
        std::ostringstream msg;
        msg << "Partition: mode index " << idx << " exceeds mode count "
            << modes;
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

Partition parse_partition(const std::string& text) {
  std::vector<std::vector<int>> groups;
  std::string cleaned;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
  }
  require(!cleaned.empty(), "parse_partition: empty partition");
  std::stringstream groups_in(cleaned);
  std::string group_text;
  while (std::getline(groups_in, group_text, ';')) {
    std::vector<int> group;
    std::stringstream idx_in(group_text);
    std::string idx_text;
    while (std::getline(idx_in, idx_text, ',')) {
      std::size_t used = 0;
      int idx = 0;
      try {
        idx = std::stoi(idx_text, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_partition: bad index '" +
                                    idx_text + "'");
      }
      require(used == idx_text.size(),
              "parse_partition: bad index '" + idx_text + "'");
      group.push_back(idx);
    }
    groups.push_back(std::move(group));
  }
  return Partition(std::move(groups));
}

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& v) {
  const Matrix& m = v.matrix();
  const int n = v.modes();

  // V^{1/2} from the symmetric eigendecomposition; V is PD by construction.
  Eigen::SelfAdjointEigenSolver<Matrix> vs(m);
  require(vs.info() == Eigen::Success,
          "symplectic_spectrum: eigensolver failed");
  require(vs.eigenvalues().minCoeff() > 0.0,
          "symplectic_spectrum: matrix is not positive definite");
  const Matrix root =
      vs.eigenvectors() *
      vs.eigenvalues().cwiseSqrt().asDiagonal() *
      vs.eigenvectors().transpose();

  const Matrix w = omega(n);
  Matrix squared = root * w * m * w.transpose() * root;
  squared = 0.5 * (squared + squared.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Matrix> es(squared);
  require(es.info() == Eigen::Success,
          "symplectic_spectrum: eigensolver failed");

  // Eigenvalues are {nu_j^2} doubly degenerate; collapse adjacent pairs.
  Vector evals = es.eigenvalues();
  std::vector<double> nus(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double lo = std::sqrt(std::max(0.0, evals(2 * j)));
    const double hi = std::sqrt(std::max(0.0, evals(2 * j + 1)));
    nus[static_cast<std::size_t>(n - 1 - j)] = 0.5 * (lo + hi);
  }
  return SymplecticSpectrum{std::move(nus)};
}

bool is_bona_fide(const CovarianceMatrix& v, double tol) {
  return symplectic_spectrum(v).min() >= 1.0 - tol;
}

namespace detail {

std::vector<int> quadrature_indices(const std::vector<int>& mode_indices) {
  std::vector<int> out;
  out.reserve(2 * mode_indices.size());
  for (int m : mode_indices) {
    require(m >= 1, "mode indices are 1-based");
    out.push_back(2 * (m - 1));
    out.push_back(2 * (m - 1) + 1);
  }
  return out;
}

double spd_logdet(const Matrix& m) {
  Eigen::LLT<Matrix> llt(m);
  require(llt.info() == Eigen::Success,
          "spd_logdet: matrix is not positive definite");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    sum += std::log(llt.matrixLLT()(i, i));
  }
  return 2.0 * sum;
}

}  // namespace detail

CovarianceMatrix reduce(const CovarianceMatrix& v,
                        const std::vector<int>& mode_indices) {
  require(!mode_indices.empty(), "reduce: empty mode selection");
  std::vector<bool> seen(static_cast<std::size_t>(v.modes()) + 1, false);
  for (int m : mode_indices) {
    require(m >= 1 && m <= v.modes(), "reduce: mode index out of range");
    require(!seen[static_cast<std::size_t>(m)], "reduce: duplicate mode index");
    seen[static_cast<std::size_t>(m)] = true;
  }
  const auto rows = detail::quadrature_indices(mode_indices);
  const Eigen::Index d = static_cast<Eigen::Index>(rows.size());
  Matrix out(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      out(j, k) = v.matrix()(rows[static_cast<std::size_t>(j)],
                             rows[static_cast<std::size_t>(k)]);
    }
  }
  return CovarianceMatrix(std::move(out));
}

CovarianceMatrix schur_complement(const CovarianceMatrix& v,
                                  const std::vector<int>& measured) {
  require(!measured.empty(), "schur_complement: measured set is empty");
  std::vector<bool> in_a(static_cast<std::size_t>(v.modes()) + 1, false);
  for (int m : measured) {
    require(m >= 1 && m <= v.modes(),
            "schur_complement: mode index out of range");
    require(!in_a[static_cast<std::size_t>(m)],
            "schur_complement: duplicate mode index");
    in_a[static_cast<std::size_t>(m)] = true;
  }
  std::vector<int> remaining;
  for (int m = 1; m <= v.modes(); ++m) {
    if (!in_a[static_cast<std::size_t>(m)]) remaining.push_back(m);
  }
  require(!remaining.empty(),
          "schur_complement: measured set must be a proper subset");

  const auto ia = detail::quadrature_indices(measured);
  const auto ib = detail::quadrature_indices(remaining);
  const Eigen::Index da = static_cast<Eigen::Index>(ia.size());
  const Eigen::Index db = static_cast<Eigen::Index>(ib.size());
  Matrix block_a(da, da), block_b(db, db), off(da, db);
  for (Eigen::Index j = 0; j < da; ++j) {
    for (Eigen::Index k = 0; k < da; ++k) {
      block_a(j, k) = v.matrix()(ia[static_cast<std::size_t>(j)],
                                 ia[static_cast<std::size_t>(k)]);
    }
    for (Eigen::Index k = 0; k < db; ++k) {
      off(j, k) = v.matrix()(ia[static_cast<std::size_t>(j)],
                             ib[static_cast<std::size_t>(k)]);
    }
  }
  for (Eigen::Index j = 0; j < db; ++j) {
    for (Eigen::Index k = 0; k < db; ++k) {
      block_b(j, k) = v.matrix()(ib[static_cast<std::size_t>(j)],
                                 ib[static_cast<std::size_t>(k)]);
    }
  }

  Eigen::LLT<Matrix> llt(block_a);
  require(llt.info() == Eigen::Success,
          "schur_complement: measured block is not positive definite");
  Matrix result = block_b - off.transpose() * llt.solve(off);
  result = 0.5 * (result + result.transpose()).eval();
  return CovarianceMatrix(std::move(result));
}

double purity(const CovarianceMatrix& v) {
  return std::exp(-0.5 * detail::spd_logdet(v.matrix()));
}

}  // namespace cvinfo
