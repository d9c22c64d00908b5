#include "gac/convex_roof.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace gac {

namespace {

constexpr double kWeightTol = 1e-12;

std::uint64_t restart_seed(std::uint64_t base, int restart) {
  // splitmix64 step keeps per-restart streams decorrelated and stable
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (restart + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Eigen::MatrixXcd random_isometry(int m, int r, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(m, r);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < r; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Identity(m, r);
  q = qr.householderQ() * q;
  return q;
}

// weight * measure of the normalized column; zero-weight columns contribute 0
double member_cost(const Eigen::VectorXcd& unnormalized, const std::vector<int>& dims,
                   const RoofMeasure& measure) {
  const double w = unnormalized.squaredNorm();
  if (w <= kWeightTol) return 0.0;
  PureState psi(unnormalized / unnormalized.norm(), dims);
  return w * measure.evaluate(psi);
}

}  // namespace

Eigen::MatrixXcd Ensemble::reconstruct() const {
  if (members.empty()) throw std::invalid_argument("empty ensemble");
  const Eigen::Index d = members.front().dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t i = 0; i < members.size(); ++i)
    out += weights[i] * (members[i].amplitudes() * members[i].amplitudes().adjoint());
  return out;
}

double RoofMeasure::evaluate(const PureState& psi) const {
  switch (kind) {
    case Kind::AlphaConcurrence:
      if (!cut) throw std::invalid_argument("alpha-concurrence roof needs a designated cut");
      return alpha_concurrence(reduced_spectrum(psi, *cut), alpha);
    case Kind::GAlphaC:
      return galpha_c(psi, alpha).aggregate;
  }
  throw std::invalid_argument("unsupported roof measure");
}

Ensemble decompose_via_isometry(const std::vector<std::pair<double, PureState>>& spectral,
                                const Eigen::MatrixXcd& isometry) {
  if (spectral.empty()) throw std::invalid_argument("empty spectral ensemble");
  const int r = static_cast<int>(spectral.size());
  if (isometry.cols() != r || isometry.rows() < r)
    throw std::invalid_argument("isometry must be m x r with m >= r");
  if ((isometry.adjoint() * isometry - Eigen::MatrixXcd::Identity(r, r))
          .cwiseAbs()
          .maxCoeff() > 1e-10)
    throw std::invalid_argument("columns are not orthonormal");

  const auto& dims = spectral.front().second.local_dims();
  Ensemble out;
  for (Eigen::Index j = 0; j < isometry.rows(); ++j) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spectral.front().second.dim());
    for (int k = 0; k < r; ++k)
      v += isometry(j, k) * std::sqrt(spectral[k].first) * spectral[k].second.amplitudes();
    const double w = v.squaredNorm();
    if (w <= kWeightTol) continue;
    out.weights.push_back(w);
    out.members.emplace_back(v / v.norm(), dims);
  }
  return out;
}

RoofResult estimate_convex_roof(const DensityMatrix& rho, const RoofMeasure& measure,
                                const RoofConfig& cfg) {
  if (cfg.restarts < 1 || cfg.max_iterations < 1 || cfg.tolerance <= 0)
    throw std::invalid_argument("roof config counts must be positive");

  const auto spectral = spectral_decomposition(rho);
  const int r = static_cast<int>(spectral.size());
  int m = cfg.ensemble_size;
  if (m == 0) m = std::min(2 * r, r * r);
  if (m < r) throw std::invalid_argument("ensemble size below the rank of rho");

  RoofResult result;

  if (r == 1) {
    // a rank-1 state has exactly one decomposition
    result.best_ensemble = Ensemble{{1.0}, {spectral.front().second}};
    result.upper_bound = measure.evaluate(spectral.front().second);
    result.converged = true;
    result.best_trace = {result.upper_bound};
    return result;
  }

  const auto& dims = rho.local_dims();
  const Eigen::Index d = rho.dim();
  Eigen::MatrixXcd eigvecs(d, r);  // columns scaled by sqrt(weight)
  for (int k = 0; k < r; ++k)
    eigvecs.col(k) = std::sqrt(spectral[k].first) * spectral[k].second.amplitudes();

  double global_best = std::numeric_limits<double>::infinity();
  Eigen::MatrixXcd global_best_isometry;
  bool global_converged = false;
  int total_iterations = 0;
  std::vector<double> global_trace;

  constexpr int kStagnationWindow = 200;
  const double base_angle = std::numbers::pi / 4.0;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::mt19937_64 rng(restart_seed(cfg.seed.value, restart));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> row(0, m - 1);

    Eigen::MatrixXcd iso = random_isometry(m, r, rng);
    // columns of v are the unnormalized ensemble members
    Eigen::MatrixXcd v = eigvecs * iso.transpose();
    std::vector<double> costs(m);
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      costs[j] = member_cost(v.col(j), dims, measure);
      total += costs[j];
    }

    double best = total;
    Eigen::MatrixXcd best_iso = iso;
    int stagnant = 0;
    bool converged = false;
    std::vector<double> trace;
    trace.reserve(cfg.max_iterations);

    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
      ++total_iterations;
      const double amplitude = base_angle * std::pow(0.95, iter / 100);
      int j = row(rng);
      int k = row(rng);
      while (k == j) k = row(rng);
      const double angle = amplitude * (2.0 * unit(rng) - 1.0);
      const double phase = 2.0 * std::numbers::pi * unit(rng);
      const Complex ep(std::cos(phase), std::sin(phase));
      const double c = std::cos(angle), s = std::sin(angle);

      const Eigen::VectorXcd vj = c * v.col(j) - std::conj(ep) * s * v.col(k);
      const Eigen::VectorXcd vk = ep * s * v.col(j) + c * v.col(k);
      const double cj = member_cost(vj, dims, measure);
      const double ck = member_cost(vk, dims, measure);
      const double candidate = total - costs[j] - costs[k] + cj + ck;

      if (candidate < total) {
        v.col(j) = vj;
        v.col(k) = vk;
        costs[j] = cj;
        costs[k] = ck;
        total = candidate;
        const Eigen::RowVectorXcd uj = c * iso.row(j) - std::conj(ep) * s * iso.row(k);
        const Eigen::RowVectorXcd uk = ep * s * iso.row(j) + c * iso.row(k);
        iso.row(j) = uj;
        iso.row(k) = uk;
      }
      if (best - total >= cfg.tolerance) {
        best = total;
        best_iso = iso;
        stagnant = 0;
      } else {
        if (total < best) {
          best = total;
          best_iso = iso;
        }
        ++stagnant;
      }
      trace.push_back(best);
      if (stagnant >= kStagnationWindow) {
        converged = true;
        break;
      }
    }

    if (best < global_best) {
      global_best = best;
      global_best_isometry = best_iso;
      global_converged = converged;
      global_trace = std::move(trace);
    }
  }

  result.best_ensemble = decompose_via_isometry(spectral, global_best_isometry);
  double bound = 0.0;
  for (std::size_t i = 0; i < result.best_ensemble.members.size(); ++i)
    bound += result.best_ensemble.weights[i] *
             measure.evaluate(result.best_ensemble.members[i]);
  result.upper_bound = bound;
  result.iterations_used = total_iterations;
  result.converged = global_converged;
  result.best_trace = std::move(global_trace);
  return result;
}

}  // namespace gac
