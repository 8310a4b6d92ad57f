#include "cvinfo/random.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <random>
#include <stdexcept>

namespace cvinfo {

namespace {

// Uniform double in [lo, hi) from the top 53 bits of the generator output;
// avoids std::uniform_real_distribution, whose output sequence is
// implementation-defined.
double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

Matrix random_symmetric(std::mt19937_64& rng, int dim, double strength) {
  Matrix a(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int k = j; k < dim; ++k) {
      const double x = uniform(rng, -strength, strength);
      a(j, k) = x;
      a(k, j) = x;
    }
  }
  return a;
}

SymplecticMatrix random_symplectic_from(std::mt19937_64& rng, int modes,
                                        double strength) {
  const Matrix a = random_symmetric(rng, 2 * modes, strength);
  Matrix generator = omega(modes) * a;
  // exp of an element of sp(2n,R) lands in the identity component of the
  // symplectic group; Eigen uses scaling-and-squaring with Pade.
  Matrix s = generator.exp();
  return SymplecticMatrix(std::move(s), 1e-8);
}

}  // namespace

SymplecticMatrix random_symplectic(int modes, std::uint64_t seed,
                                   double strength) {
  if (modes < 1) {
    throw std::invalid_argument("random_symplectic: mode count must be >= 1");
  }
  if (!(strength > 0.0)) {
    throw std::invalid_argument("random_symplectic: strength must be > 0");
  }
  std::mt19937_64 rng(seed);
  return random_symplectic_from(rng, modes, strength);
}

CovarianceMatrix random_cm(int modes, std::uint64_t seed, double nu_max) {
  if (modes < 1) {
    throw std::invalid_argument("random_cm: mode count must be >= 1");
  }
  if (nu_max < 1.0) {
    throw std::invalid_argument("random_cm: nu_max must be >= 1");
  }
  std::mt19937_64 rng(seed);
  Vector williamson(2 * modes);
  for (int j = 0; j < modes; ++j) {
    const double nu = uniform(rng, 1.0, nu_max);
    williamson(2 * j) = nu;
    williamson(2 * j + 1) = nu;
  }
  const SymplecticMatrix s = random_symplectic_from(rng, modes, 1.0);
  Matrix v = s.matrix() * williamson.asDiagonal() * s.matrix().transpose();
  v = 0.5 * (v + v.transpose()).eval();
  return CovarianceMatrix(std::move(v));
}

}  // namespace cvinfo
