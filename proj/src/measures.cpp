#include "gac/measures.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace gac {

namespace {

// Per-cut values below this floor are reported as exact zeros, so that
// constructed biseparable states aggregate to 0 exactly.
constexpr double kCutFloor = 1e-12;

double floor_cut(double v) { return v > kCutFloor ? v : 0.0; }

GmeReport aggregate_geometric(MeasureId id, std::optional<double> parameter,
                              const PureState& state,
                              const std::function<double(const Spectrum&)>& kernel) {
  if (state.num_parties() < 3)
    throw std::invalid_argument("genuine multipartite measures need at least 3 parties");
  GmeReport report{id, parameter, {}, 0.0, std::nullopt};
  const BipartitionSet cuts = enumerate_bipartitions(state.num_parties());
  double log_sum = 0.0;
  double product = 1.0;
  bool has_zero = false;
  for (const Bipartition& cut : cuts.members) {
    const double v = floor_cut(kernel(reduced_spectrum(state, cut)));
    report.per_cut.emplace_back(cut, v);
    if (v == 0.0) {
      has_zero = true;
    } else {
      log_sum += std::log(v);
      product *= v;
    }
  }
  if (has_zero) {
    report.aggregate = 0.0;
    report.product = 0.0;
  } else {
    report.aggregate = std::exp(log_sum / static_cast<double>(cuts.members.size()));
    report.product = product;
  }
  return report;
}

GmeReport aggregate_min(MeasureId id, const PureState& state,
                        const std::function<double(const Spectrum&)>& kernel) {
  if (state.num_parties() < 3)
    throw std::invalid_argument("genuine multipartite measures need at least 3 parties");
  GmeReport report{id, std::nullopt, {}, 0.0, std::nullopt};
  const BipartitionSet cuts = enumerate_bipartitions(state.num_parties());
  double min_v = std::numeric_limits<double>::infinity();
  for (const Bipartition& cut : cuts.members) {
    const double v = floor_cut(kernel(reduced_spectrum(state, cut)));
    report.per_cut.emplace_back(cut, v);
    min_v = std::min(min_v, v);
  }
  report.aggregate = min_v;
  return report;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::string measure_label(MeasureId id, std::optional<double> parameter) {
  std::ostringstream os;
  switch (id) {
    case MeasureId::GAlphaC:
      os << "galphac(alpha=" << parameter.value() << ")";
      break;
    case MeasureId::GQC:
      os << "gqc(q=" << parameter.value() << ")";
      break;
    case MeasureId::GMC:
      os << "gmc";
      break;
    case MeasureId::GGM:
      os << "ggm";
      break;
    case MeasureId::Fill:
      os << "fill";
      break;
  }
  return os.str();
}

double alpha_concurrence(const Spectrum& spec, AlphaParam alpha) {
  double sum = 0.0;
  for (double v : spec.values()) {
    if (v <= kZeroTol) continue;
    sum += alpha.value == 0.0 ? 1.0 : std::pow(v, alpha.value);
  }
  return std::max(0.0, sum - 1.0);
}

double q_concurrence(const Spectrum& spec, QParam q) {
  double sum = 0.0;
  for (double v : spec.values())
    if (v > kZeroTol) sum += std::pow(v, q.value);
  return std::max(0.0, 1.0 - sum);
}

double concurrence(const Spectrum& spec) {
  double sum = 0.0;
  for (double v : spec.values())
    if (v > kZeroTol) sum += v * v;
  const double rad = std::max(0.0, 2.0 * (1.0 - sum));
  return rad > kCutFloor ? std::sqrt(rad) : 0.0;
}

GmeReport galpha_c(const PureState& state, AlphaParam alpha) {
  return aggregate_geometric(MeasureId::GAlphaC, alpha.value, state,
                             [alpha](const Spectrum& s) { return alpha_concurrence(s, alpha); });
}

GmeReport gqc(const PureState& state, QParam q) {
  return aggregate_geometric(MeasureId::GQC, q.value, state,
                             [q](const Spectrum& s) { return q_concurrence(s, q); });
}

GmeReport gmc(const PureState& state) {
  // Each cut's concurrence is rescaled by its own maximum sqrt(2(d-1)/d)
  // (d = smaller side dimension) so that cuts of unequal size are compared
  // on a common [0, 1] scale; on qubit-vs-rest cuts this is the plain
  // concurrence. Without the rescaling the minimum is dominated by the
  // larger cuts and the measure loses its sharp-peak behaviour on
  // four-qubit families.
  return aggregate_min(MeasureId::GMC, state, [](const Spectrum& s) {
    const double d = static_cast<double>(s.size());
    double sum_sq = 0.0;
    for (double v : s.values())
      if (v > kZeroTol) sum_sq += v * v;
    const double rad = std::max(0.0, d / (d - 1.0) * (1.0 - sum_sq));
    return rad > kCutFloor ? std::sqrt(rad) : 0.0;
  });
}

GmeReport ggm(const PureState& state) {
  return aggregate_min(MeasureId::GGM, state, [](const Spectrum& s) {
    return std::max(0.0, 1.0 - s.values().front());
  });
}

double concurrence_fill(const PureState& state) {
  if (state.local_dims() != std::vector<int>{2, 2, 2})
    throw std::invalid_argument("concurrence fill is defined for exactly 3 qubits");
  double x[3];
  for (int k = 0; k < 3; ++k) {
    const Spectrum s = reduced_spectrum(state, Bipartition({k}, 3));
    const double c = concurrence(s);
    x[k] = c * c;
  }
  const double half = (x[0] + x[1] + x[2]) / 2.0;
  const double rad =
      (16.0 / 3.0) * half * (half - x[0]) * (half - x[1]) * (half - x[2]);
  return std::pow(std::max(0.0, rad), 0.25);
}

double ghz_alpha_c_analytic(int n, AlphaParam alpha) {
  if (n < 3) throw std::invalid_argument("ghz_alpha_c_analytic: n must be >= 3");
  return std::pow(2.0, 1.0 - alpha.value) - 1.0;
}

double w_alpha_c_analytic(int n, AlphaParam alpha) {
  if (n < 3) throw std::invalid_argument("w_alpha_c_analytic: n must be >= 3");
  const double a = alpha.value;
  // Cut value on any k-vs-rest split of W_n: (k^a + (n-k)^a)/n^a - 1.
  // Log-space sum over cut-size classes; even n gives the middle class half
  // its binomial weight.
  double log_sum = 0.0;
  for (int k = 1; 2 * k <= n; ++k) {
    const double value =
        (std::pow(k, a) + std::pow(n - k, a)) / std::pow(n, a) - 1.0;
    if (value <= 0.0) return 0.0;  // only hit at a = 0 limit artifacts
    double weight = static_cast<double>(binomial(n, k));
    if (2 * k == n) weight /= 2.0;
    log_sum += weight * std::log(value);
  }
  return std::exp(log_sum / static_cast<double>(cardinality(n)));
}

double continuity_bound_bipartite(double epsilon, int d, AlphaParam alpha) {
  if (epsilon < 0) throw std::invalid_argument("epsilon must be nonnegative");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (epsilon == 0.0) return 0.0;
  return std::pow(epsilon, alpha.value) * std::pow(d, 1.0 - alpha.value);
}

double continuity_bound_multipartite(double epsilon, int n,
                                     std::span<const int> cut_min_dims,
                                     AlphaParam alpha) {
  if (epsilon < 0) throw std::invalid_argument("epsilon must be nonnegative");
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  if (static_cast<int>(cut_min_dims.size()) != n / 2)
    throw std::invalid_argument("need one class dimension per cut size 1..floor(n/2)");
  if (epsilon == 0.0) return 0.0;
  double sum = 0.0;
  for (int i = 1; 2 * i <= n; ++i) {
    double weight = static_cast<double>(binomial(n, i));
    if (2 * i == n) weight /= 2.0;
    sum += weight * continuity_bound_bipartite(epsilon, cut_min_dims[i - 1], alpha);
  }
  return std::pow(sum, 1.0 / static_cast<double>(cardinality(n)));
}

}  // namespace gac
