#pragma once

#include <cstdint>

#include "gac/core.hpp"

namespace gac {

/// Family angle, restricted to [0, pi/2].
struct FamilyParam {
  double theta;
  explicit FamilyParam(double t);
};

struct Seed {
  std::uint64_t value = 0;
};

/// (|0...0> + |1...1>)/sqrt(2) on n qubits.
PureState ghz(int n);

/// Equal superposition of the n single-excitation basis states.
PureState w(int n);

/// (cos t |000> + sin t |001>)/sqrt(2) + |111>/sqrt(2).
PureState type_a(FamilyParam theta);

/// cos t |000> + sin t |111>.
PureState type_b(FamilyParam theta);

/// sin t (cos(3pi/5)|0100> + sin(3pi/5)|1000>) + cos t |0011>.
PureState four_qubit_family(FamilyParam theta);

/// Haar-uniform pure state: iid complex Gaussian amplitudes, normalized.
/// Deterministic per seed.
PureState random_pure(const std::vector<int>& local_dims, Seed seed);

/// Haar-random d x d unitary (QR of a Ginibre matrix with phase fix).
Eigen::MatrixXcd random_unitary(int d, Seed seed);

/// Mix a Haar-random orthogonal direction into the state so that the
/// projector trace distance to the input is at most epsilon; the achieved
/// distance is re-verified numerically before returning.
PureState perturb(const PureState& state, double epsilon, Seed seed);

}  // namespace gac
