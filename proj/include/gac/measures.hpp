#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gac/core.hpp"

namespace gac {

/// Exponent of the alpha-concurrence, restricted to [0, 1/2].
struct AlphaParam {
  double value;
  explicit AlphaParam(double v) : value(v) {
    if (!(v >= 0.0 && v <= 0.5))
      throw std::invalid_argument("alpha must lie in [0, 1/2]");
  }
};

/// Exponent of the q-concurrence, q >= 2.
struct QParam {
  double value;
  explicit QParam(double v) : value(v) {
    if (!(v >= 2.0)) throw std::invalid_argument("q must be >= 2");
  }
};

enum class MeasureId { GAlphaC, GQC, GMC, GGM, Fill };

/// Canonical measure label as used in CSV/JSON output,
/// e.g. "galphac(alpha=0.5)", "gqc(q=3)", "gmc".
std::string measure_label(MeasureId id, std::optional<double> parameter);

/// Per-bipartition values plus the aggregate of one genuine-multipartite
/// measure evaluation. For the geometric-mean measures the raw product over
/// cuts is stored as well; the aggregate itself is computed in log space.
struct GmeReport {
  MeasureId measure_id;
  std::optional<double> parameter;
  std::vector<std::pair<Bipartition, double>> per_cut;
  double aggregate = 0.0;
  std::optional<double> product;

  std::string label() const { return measure_label(measure_id, parameter); }
};

// ---- spectrum-level kernels ----

/// Tr rho^alpha - 1 over the values above the zero floor. At alpha = 0 this
/// evaluates to rank - 1 (the 0^0 = 0 convention); note the kernel is then
/// discontinuous in the state.
double alpha_concurrence(const Spectrum& spec, AlphaParam alpha);

/// 1 - Tr rho^q.
double q_concurrence(const Spectrum& spec, QParam q);

/// sqrt(2 (1 - Tr rho^2)).
double concurrence(const Spectrum& spec);

// ---- state-level measures (n >= 3 parties) ----

GmeReport galpha_c(const PureState& state, AlphaParam alpha);
GmeReport gqc(const PureState& state, QParam q);
GmeReport gmc(const PureState& state);
GmeReport ggm(const PureState& state);

/// Heron-type area of the concurrence triangle; three qubits only.
double concurrence_fill(const PureState& state);

// ---- closed forms for the GHZ/W families ----

double ghz_alpha_c_analytic(int n, AlphaParam alpha);
double w_alpha_c_analytic(int n, AlphaParam alpha);

// ---- continuity bounds ----

/// eps^alpha * d^(1-alpha), valid per cut with d the marginal dimension.
double continuity_bound_bipartite(double epsilon, int d, AlphaParam alpha);

/// Aggregate bound: the binomial-weighted sum of per-class bipartite bounds
/// raised to 1/c(beta). cut_min_dims holds one d_i per cut-size class
/// i = 1..floor(n/2); for even n the middle class carries half weight
/// (an extension of the odd-n statement, mirroring c(beta)).
double continuity_bound_multipartite(double epsilon, int n,
                                     std::span<const int> cut_min_dims,
                                     AlphaParam alpha);

}  // namespace gac
