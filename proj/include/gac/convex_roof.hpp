#pragma once

#include <optional>

#include "gac/measures.hpp"
#include "gac/states.hpp"

namespace gac {

/// A pure-state decomposition {p_i, |psi_i>} of a density matrix.
struct Ensemble {
  std::vector<double> weights;
  std::vector<PureState> members;

  /// Reconstruct sum_i p_i |psi_i><psi_i| (plain matrix; callers compare
  /// against the source density operator).
  Eigen::MatrixXcd reconstruct() const;
};

/// Which pure-state functional the roof search averages.
struct RoofMeasure {
  enum class Kind { AlphaConcurrence, GAlphaC };
  Kind kind;
  AlphaParam alpha;
  /// Designated cut; required for AlphaConcurrence, ignored for GAlphaC.
  std::optional<Bipartition> cut;

  double evaluate(const PureState& psi) const;
};

struct RoofConfig {
  int ensemble_size = 0;  // 0 -> 2*rank, capped at rank^2
  int restarts = 20;
  int max_iterations = 2000;
  double tolerance = 1e-8;
  Seed seed;
};

struct RoofResult {
  double upper_bound = 0.0;
  Ensemble best_ensemble;
  int iterations_used = 0;
  bool converged = false;
  /// Best value after each iteration of the winning restart (non-increasing).
  std::vector<double> best_trace;
};

/// Rotate the spectral ensemble of a density matrix by an m x r matrix with
/// orthonormal columns: member j = normalize(sum_k U_jk sqrt(w_k) |e_k>) with
/// weight equal to its squared pre-normalization norm. Every pure-state
/// decomposition of the source state arises this way.
Ensemble decompose_via_isometry(const std::vector<std::pair<double, PureState>>& spectral,
                                const Eigen::MatrixXcd& isometry);

/// Heuristic minimization of the ensemble-averaged measure over pure-state
/// decompositions: multi-restart stochastic local search over isometries
/// using random two-row Givens rotations with a shrinking angle schedule.
/// The result is an upper bound on the convex roof, never claimed exact.
/// Deterministic per (rho, measure, cfg).
RoofResult estimate_convex_roof(const DensityMatrix& rho, const RoofMeasure& measure,
                                const RoofConfig& cfg);

}  // namespace gac
