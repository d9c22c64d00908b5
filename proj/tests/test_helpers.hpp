#pragma once

#include <random>

#include <Eigen/Dense>

#include "gac/core.hpp"

namespace gac::test {

inline Eigen::MatrixXcd random_complex_matrix(Eigen::Index rows, Eigen::Index cols,
                                              std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
  return m;
}

// Full-rank random density operator (Ginibre construction).
inline DensityMatrix random_density(const std::vector<int>& dims, std::mt19937_64& rng) {
  Eigen::Index d = 1;
  for (int x : dims) d *= x;
  Eigen::MatrixXcd a = random_complex_matrix(d, d, rng);
  Eigen::MatrixXcd rho = a * a.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()) / 2.0;  // scrub rounding asymmetry
  return DensityMatrix(std::move(rho), dims);
}

}  // namespace gac::test
