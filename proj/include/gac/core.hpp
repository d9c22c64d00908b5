#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gac/bipartitions.hpp"

namespace gac {

using Complex = std::complex<double>;

/// Eigen/singular values below this floor are treated as exact zeros.
inline constexpr double kZeroTol = 1e-12;

/// Normalized multipartite state vector.
///
/// Basis convention: |a1 a2 ... an> maps to the flat index with party 0
/// most significant, i.e. index = a1*(d2*d3*...*dn) + a2*(d3*...*dn) + ... + an.
/// This convention is bit-exact in the JSON file schema.
class PureState {
public:
  PureState(Eigen::VectorXcd amplitudes, std::vector<int> local_dims);

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  const std::vector<int>& local_dims() const { return local_dims_; }
  int num_parties() const { return static_cast<int>(local_dims_.size()); }
  Eigen::Index dim() const { return amplitudes_.size(); }

private:
  Eigen::VectorXcd amplitudes_;
  std::vector<int> local_dims_;
};

/// Density operator on a multipartite Hilbert space.
/// Construction checks Hermiticity, unit trace and positivity.
class DensityMatrix {
public:
  DensityMatrix(Eigen::MatrixXcd entries, std::vector<int> local_dims);

  static DensityMatrix projector(const PureState& psi);

  const Eigen::MatrixXcd& entries() const { return entries_; }
  const std::vector<int>& local_dims() const { return local_dims_; }
  int num_parties() const { return static_cast<int>(local_dims_.size()); }
  Eigen::Index dim() const { return entries_.rows(); }

private:
  Eigen::MatrixXcd entries_;
  std::vector<int> local_dims_;
};

/// Eigenvalues of a reduced density operator, sorted descending.
/// Values are clamped into [0,1]; construction rejects clamping beyond 1e-10
/// and spectra whose sum deviates from 1 by more than 1e-9.
class Spectrum {
public:
  explicit Spectrum(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Count of values above the zero floor.
  int rank() const;

private:
  std::vector<double> values_;
};

/// Eigenvalues of the marginal on side S of the given bipartition, computed
/// as squared singular values of the reshaped amplitude tensor. The returned
/// spectrum has length min(dim S, dim S-bar), padded with exact zeros where
/// values fall below the zero floor.
Spectrum reduced_spectrum(const PureState& state, const Bipartition& part);

/// Trace out every party not listed in `keep` (original party order kept).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Trace norm of rho - sigma (sum of absolute eigenvalues of the difference).
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Eigen-decomposition of rho restricted to eigenvalues above the zero floor;
/// weights sum to 1 and the weighted projectors reconstruct rho.
std::vector<std::pair<double, PureState>> spectral_decomposition(const DensityMatrix& rho);

/// Apply a single-party unitary U (d x d for that party's dimension).
PureState apply_local_unitary(const PureState& state, int party, const Eigen::MatrixXcd& u);

/// Relabel parties: party i of the output is party perm[i] of the input.
PureState permute_parties(const PureState& state, const std::vector<int>& perm);

/// Trace distance between the projectors onto two pure states.
double projector_distance(const PureState& a, const PureState& b);

}  // namespace gac
