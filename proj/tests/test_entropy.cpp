#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cvinfo/entropy.hpp"
#include "cvinfo/random.hpp"
#include "cvinfo/symplectic.hpp"

#include "support.hpp"

#include <cmath>
#include <stdexcept>

using namespace cvinfo;
using cvinfo::testing::tmsv;

namespace {

// Eq.-style single-mode von Neumann entropy, written out independently of
// the library path.
double vn_of_nu(double nu) {
  if (nu <= 1.0) return 0.0;
  const double up = 0.5 * (nu + 1.0);
  const double dn = 0.5 * (nu - 1.0);
  return up * std::log(up) - dn * std::log(dn);
}

}  // namespace

TEST_CASE("log-determinant entropy") {
  CHECK(logdet_entropy(CovarianceMatrix::vacuum(3)) == doctest::Approx(0.0));
  CHECK(logdet_entropy(CovarianceMatrix(3.0 * Matrix::Identity(2, 2))) ==
        doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-12));

  for (double r : {0.25, 0.9}) {
    const CovarianceMatrix v = tmsv(r);
    CHECK(std::abs(v.matrix().determinant() - 1.0) <= 1e-12);
    CHECK(logdet_entropy(v) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("renyi-2 entropy") {
  CHECK(renyi2_entropy(CovarianceMatrix::vacuum(1)) == doctest::Approx(0.0));
  CHECK(renyi2_entropy(CovarianceMatrix(3.0 * Matrix::Identity(2, 2))) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-12));

  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const CovarianceMatrix v = random_cm(3, rng(), 4.0);
    CHECK(renyi2_entropy(v) ==
          doctest::Approx(-std::log(purity(v))).epsilon(1e-12));
  }
}

TEST_CASE("von Neumann entropy") {
  CHECK(von_neumann_entropy(CovarianceMatrix::vacuum(4)) ==
        doctest::Approx(0.0));
  // nu = 3: (4/2)ln(4/2) - (2/2)ln(2/2) = 2 ln 2.
  CHECK(von_neumann_entropy(CovarianceMatrix(3.0 * Matrix::Identity(2, 2))) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));

  for (double r : {0.3, 0.7, 1.1}) {
    const CovarianceMatrix reduced = reduce(tmsv(r), {2});
    const double m = 2.0 * std::log(std::cosh(2.0 * r));
    CHECK(von_neumann_entropy(reduced) ==
          doctest::Approx(f_bound(1, m)).epsilon(1e-9));
  }

  const CovarianceMatrix below(0.5 * Matrix::Identity(2, 2));
  CHECK_THROWS_AS(von_neumann_entropy(below), std::invalid_argument);
}

TEST_CASE("sqrt-determinant entropy") {
  CHECK(sqrt_det_entropy(CovarianceMatrix::vacuum(2)) == doctest::Approx(0.0));
  CHECK(sqrt_det_entropy(CovarianceMatrix(4.0 * Matrix::Identity(2, 2))) ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sqrt_det_entropy(random_cm(3, 17, 1.0)) ==
        doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("f_bound: limits, golden single-mode values, shape") {
  for (int n : {1, 2, 3, 7}) {
    CHECK(f_bound(n, 0.0) == 0.0);
  }
  CHECK_THROWS_AS(f_bound(1, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(f_bound(0, 1.0), std::invalid_argument);

  // Continuity at the removable singularity.
  for (int n : {1, 2, 3}) {
    CHECK(std::abs(f_bound(n, 1e-6)) <= 1e-4);
    CHECK(std::abs(f_bound(n, 1e-12)) <= 1e-9);
  }

  // Single-mode exactness: f_1(2 ln nu) is the von Neumann entropy.
  for (double nu : {1.5, 2.0, 5.0}) {
    CHECK(f_bound(1, 2.0 * std::log(nu)) ==
          doctest::Approx(vn_of_nu(nu)).epsilon(1e-9));
  }

  // Monotone in m and n, concave in m.
  for (int n : {1, 2, 3}) {
    double prev = 0.0;
    for (int i = 1; i <= 40; ++i) {
      const double m = 0.25 * i;
      const double f = f_bound(n, m);
      CHECK(f > prev);
      prev = f;
      if (n > 1) CHECK(f > f_bound(n - 1, m));
      const double h = 1e-3;
      const double second =
          f_bound(n, m + h) - 2.0 * f + f_bound(n, m - h);
      CHECK(second <= 1e-9);
    }
  }
}

TEST_CASE("f_bound subadditivity chain on a grid") {
  for (int n : {1, 2, 3}) {
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        const double x = i;
        const double y = j;
        const double fx = f_bound(n, x);
        const double fy = f_bound(n, y);
        const double fxy = f_bound(n, x + y);
        CHECK(fx + fy >= fxy - 1e-10);
        CHECK(fxy >= 0.5 * (f_bound(n, 2 * x) + f_bound(n, 2 * y)) - 1e-10);
      }
    }
  }
}

TEST_CASE("entropy bounds residuals") {
  const auto at_vacuum = entropy_bounds_residuals(CovarianceMatrix::vacuum(2));
  CHECK(at_vacuum.lower_slack == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(at_vacuum.upper_slack == doctest::Approx(0.0).epsilon(1e-10));

  // Single mode: the two bounds coincide.
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    const auto res = entropy_bounds_residuals(random_cm(1, rng(), 5.0));
    CHECK(std::abs(res.lower_slack) <= 1e-9);
    CHECK(std::abs(res.upper_slack) <= 1e-9);
  }

  for (int trial = 0; trial < 30; ++trial) {
    const auto res = entropy_bounds_residuals(random_cm(3, rng(), 4.0));
    CHECK(res.lower_slack >= -1e-8);
    CHECK(res.upper_slack >= -1e-8);
  }
}

TEST_CASE("all three functionals are symplectic invariants") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const CovarianceMatrix v = random_cm(n, rng(), 3.0);
    const CovarianceMatrix conj = random_symplectic(n, rng(), 1.0).apply_to(v);
    CHECK(logdet_entropy(conj) ==
          doctest::Approx(logdet_entropy(v)).epsilon(1e-7));
    CHECK(sqrt_det_entropy(conj) ==
          doctest::Approx(sqrt_det_entropy(v)).epsilon(1e-7));
    CHECK(von_neumann_entropy(conj) ==
          doctest::Approx(von_neumann_entropy(v)).epsilon(1e-7).scale(1.0));
  }
}

TEST_CASE("functionals are nonnegative and vanish exactly on pure states") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const CovarianceMatrix mixed = random_cm(n, rng(), 4.0);
    CHECK(logdet_entropy(mixed) >= -1e-9);
    CHECK(von_neumann_entropy(mixed) >= 0.0);
    CHECK(sqrt_det_entropy(mixed) >= -1e-9);

    const CovarianceMatrix pure = random_cm(n, rng(), 1.0);
    CHECK(std::abs(logdet_entropy(pure)) <= 1e-8);
    CHECK(std::abs(von_neumann_entropy(pure)) <= 1e-6);
    CHECK(std::abs(sqrt_det_entropy(pure)) <= 1e-8);
    const auto spec = symplectic_spectrum(pure);
    CHECK(spec.min() >= 1.0 - 1e-8);
    CHECK(spec.max() <= 1.0 + 1e-7);
  }
}

TEST_CASE("single-mode entropy by kind") {
  CHECK(single_mode_entropy(EntropyKind::LogDet, 1.0) == 0.0);
  CHECK(single_mode_entropy(EntropyKind::SqrtDet, 1.0) == 0.0);
  CHECK(single_mode_entropy(EntropyKind::VonNeumann, 1.0) == 0.0);
  CHECK(single_mode_entropy(EntropyKind::LogDet, 3.0) ==
        doctest::Approx(2.0 * std::log(3.0)));
  CHECK(single_mode_entropy(EntropyKind::SqrtDet, 3.0) == doctest::Approx(2.0));
  for (double x : {1.2, 2.0, 4.5}) {
    CHECK(single_mode_entropy(EntropyKind::VonNeumann, x) ==
          doctest::Approx(f_bound(1, 2.0 * std::log(x))).epsilon(1e-9));
  }
  CHECK_THROWS_AS(single_mode_entropy(EntropyKind::LogDet, 0.9),
                  std::invalid_argument);
}
