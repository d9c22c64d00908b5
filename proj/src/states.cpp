#include "gac/states.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace gac {

namespace {

Eigen::VectorXcd gaussian_vector(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v[i] = Complex(re, im);
  }
  return v;
}

}  // namespace

FamilyParam::FamilyParam(double t) : theta(t) {
  if (!(t >= 0.0 && t <= std::numbers::pi / 2 + 1e-12))
    throw std::invalid_argument("theta must lie in [0, pi/2]");
}

PureState ghz(int n) {
  if (n < 2) throw std::invalid_argument("ghz: n must be >= 2");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index(1) << n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  amps[0] = inv_sqrt2;
  amps[amps.size() - 1] = inv_sqrt2;
  return PureState(std::move(amps), std::vector<int>(n, 2));
}

PureState w(int n) {
  if (n < 2) throw std::invalid_argument("w: n must be >= 2");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index(1) << n);
  const double c = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) amps[Eigen::Index(1) << (n - 1 - i)] = c;
  return PureState(std::move(amps), std::vector<int>(n, 2));
}

PureState type_a(FamilyParam theta) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  amps[0] = inv_sqrt2 * std::cos(theta.theta);
  amps[1] = inv_sqrt2 * std::sin(theta.theta);
  amps[7] = inv_sqrt2;
  return PureState(std::move(amps), {2, 2, 2});
}

PureState type_b(FamilyParam theta) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
  amps[0] = std::cos(theta.theta);
  amps[7] = std::sin(theta.theta);
  return PureState(std::move(amps), {2, 2, 2});
}

PureState four_qubit_family(FamilyParam theta) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(16);
  const double t = theta.theta;
  const double phi = 3.0 * std::numbers::pi / 5.0;
  amps[0b0100] = std::sin(t) * std::cos(phi);
  amps[0b1000] = std::sin(t) * std::sin(phi);
  amps[0b0011] = std::cos(t);
  return PureState(std::move(amps), {2, 2, 2, 2});
}

PureState random_pure(const std::vector<int>& local_dims, Seed seed) {
  Eigen::Index d = 1;
  for (int x : local_dims) d *= x;
  std::mt19937_64 rng(seed.value);
  Eigen::VectorXcd v = gaussian_vector(d, rng);
  v /= v.norm();
  return PureState(std::move(v), local_dims);
}

Eigen::MatrixXcd random_unitary(int d, Seed seed) {
  std::mt19937_64 rng(seed.value);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // phase fix makes the distribution exactly Haar
  for (int j = 0; j < d; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

PureState perturb(const PureState& state, double epsilon, Seed seed) {
  if (epsilon < 0) throw std::invalid_argument("perturb: epsilon must be nonnegative");
  if (epsilon == 0.0) return state;

  std::mt19937_64 rng(seed.value);
  Eigen::VectorXcd dir = gaussian_vector(state.dim(), rng);
  dir -= state.amplitudes() * state.amplitudes().dot(dir);
  const double nrm = dir.norm();
  if (nrm < 1e-14) return state;  // dimension-1 corner, no orthogonal direction
  dir /= nrm;

  // projector distance of cos(t)|psi> + sin(t)|chi> from |psi> is 2 sin(t)
  const double t = std::asin(std::min(epsilon, 2.0) / 2.0) * (1.0 - 1e-12);
  Eigen::VectorXcd out = std::cos(t) * state.amplitudes() + std::sin(t) * dir;
  out /= out.norm();
  PureState result(std::move(out), state.local_dims());
  if (projector_distance(state, result) > epsilon + 1e-12)
    throw std::runtime_error("perturb: achieved distance exceeds epsilon");
  return result;
}

}  // namespace gac
