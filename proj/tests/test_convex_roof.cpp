#include <doctest.h>

#include <cmath>

#include "gac/convex_roof.hpp"
#include "test_helpers.hpp"

using namespace gac;

namespace {

DensityMatrix diagonal_ghz_mixture() {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
  m(0, 0) = 0.5;
  m(7, 7) = 0.5;
  return DensityMatrix(m, {2, 2, 2});
}

RoofMeasure galphac_half() {
  return RoofMeasure{RoofMeasure::Kind::GAlphaC, AlphaParam(0.5), std::nullopt};
}

}  // namespace

TEST_CASE("decompose_via_isometry with the identity recovers the spectral ensemble") {
  const auto spectral = spectral_decomposition(diagonal_ghz_mixture());
  const auto ens = decompose_via_isometry(spectral, Eigen::MatrixXcd::Identity(2, 2));
  REQUIRE(ens.members.size() == 2);
  CHECK(ens.weights[0] == doctest::Approx(0.5));
  CHECK(ens.weights[1] == doctest::Approx(0.5));
  for (std::size_t i = 0; i < 2; ++i)
    CHECK((ens.members[i].amplitudes() - spectral[i].second.amplitudes()).norm() < 1e-12);
}

TEST_CASE("decompose_via_isometry on a rank-1 state returns the state itself") {
  const auto spectral = spectral_decomposition(DensityMatrix::projector(ghz(3)));
  Eigen::MatrixXcd iso(3, 1);
  iso << 0.5, 0.5, 1.0 / std::sqrt(2.0);
  const auto ens = decompose_via_isometry(spectral, iso);
  double wsum = 0;
  for (std::size_t i = 0; i < ens.members.size(); ++i) {
    wsum += ens.weights[i];
    // members differ from GHZ only by a global phase
    CHECK(std::abs(std::abs(ens.members[i].amplitudes().dot(ghz(3).amplitudes())) - 1.0) <
          1e-12);
  }
  CHECK(wsum == doctest::Approx(1.0));
}

TEST_CASE("Hadamard-type rotation of the diagonal GHZ mixture gives GHZ-like members") {
  const auto spectral = spectral_decomposition(diagonal_ghz_mixture());
  Eigen::MatrixXcd iso(2, 2);
  const double h = 1.0 / std::sqrt(2.0);
  iso << h, h, h, -h;
  const auto ens = decompose_via_isometry(spectral, iso);
  REQUIRE(ens.members.size() == 2);
  CHECK(ens.weights[0] == doctest::Approx(0.5));
  CHECK(ens.weights[1] == doctest::Approx(0.5));
  for (const auto& m : ens.members) {
    CHECK(std::abs(std::abs(m.amplitudes()[0]) - h) < 1e-12);
    CHECK(std::abs(std::abs(m.amplitudes()[7]) - h) < 1e-12);
  }
  CHECK((ens.reconstruct() - diagonal_ghz_mixture().entries()).cwiseAbs().maxCoeff() <
        1e-10);
}

TEST_CASE("decompose_via_isometry rejects non-isometric input") {
  const auto spectral = spectral_decomposition(diagonal_ghz_mixture());
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Ones(2, 2);
  CHECK_THROWS_AS(decompose_via_isometry(spectral, bad), std::invalid_argument);
}

TEST_CASE("rank-1 roof returns the pure value regardless of config") {
  const DensityMatrix rho = DensityMatrix::projector(ghz(3));
  RoofConfig cfg;
  cfg.restarts = 1;
  cfg.max_iterations = 5;
  const RoofResult res = estimate_convex_roof(rho, galphac_half(), cfg);
  CHECK(std::abs(res.upper_bound - (std::sqrt(2.0) - 1.0)) < 1e-10);
  CHECK(res.converged);
}

TEST_CASE("diagonal GHZ mixture optimizes to (near) zero") {
  RoofConfig cfg;
  cfg.seed = Seed{5};
  const RoofResult res = estimate_convex_roof(diagonal_ghz_mixture(), galphac_half(), cfg);
  CHECK(res.upper_bound <= 1e-3);
}

TEST_CASE("equal mixture of the two GHZ phases equals the diagonal mixture") {
  // (|000>+|111>)/sqrt2 and (|000>-|111>)/sqrt2 mixed equally
  Eigen::VectorXcd plus = Eigen::VectorXcd::Zero(8), minus = Eigen::VectorXcd::Zero(8);
  const double h = 1.0 / std::sqrt(2.0);
  plus[0] = h;
  plus[7] = h;
  minus[0] = h;
  minus[7] = -h;
  Eigen::MatrixXcd m = 0.5 * (plus * plus.adjoint()) + 0.5 * (minus * minus.adjoint());
  const DensityMatrix rho(m, {2, 2, 2});
  CHECK((rho.entries() - diagonal_ghz_mixture().entries()).cwiseAbs().maxCoeff() < 1e-12);

  RoofConfig cfg;
  cfg.seed = Seed{6};
  const RoofResult res = estimate_convex_roof(rho, galphac_half(), cfg);
  CHECK(res.upper_bound <= 1e-3);
}

TEST_CASE("roof of a bipartite alpha-concurrence with a designated cut") {
  const DensityMatrix rho = DensityMatrix::projector(w(3));
  RoofMeasure measure{RoofMeasure::Kind::AlphaConcurrence, AlphaParam(0.5),
                      Bipartition({0}, 3)};
  RoofConfig cfg;
  cfg.restarts = 2;
  const RoofResult res = estimate_convex_roof(rho, measure, cfg);
  CHECK(std::abs(res.upper_bound -
                 (std::sqrt(2.0 / 3.0) + std::sqrt(1.0 / 3.0) - 1.0)) < 1e-10);

  RoofMeasure missing_cut{RoofMeasure::Kind::AlphaConcurrence, AlphaParam(0.5),
                          std::nullopt};
  CHECK_THROWS_AS(estimate_convex_roof(rho, missing_cut, cfg), std::invalid_argument);
}

TEST_CASE("ensemble size below rank is rejected") {
  RoofConfig cfg;
  cfg.ensemble_size = 1;
  CHECK_THROWS_AS(estimate_convex_roof(diagonal_ghz_mixture(), galphac_half(), cfg),
                  std::invalid_argument);
}

TEST_CASE("returned ensemble reconstructs rho and averages to the bound") {
  std::mt19937_64 rng(71);
  const DensityMatrix rho = gac::test::random_density({2, 2, 2}, rng);
  RoofConfig cfg;
  cfg.restarts = 3;
  cfg.max_iterations = 300;
  const RoofResult res = estimate_convex_roof(rho, galphac_half(), cfg);

  CHECK((res.best_ensemble.reconstruct() - rho.entries()).cwiseAbs().maxCoeff() < 1e-8);
  double wsum = 0, avg = 0;
  for (std::size_t i = 0; i < res.best_ensemble.members.size(); ++i) {
    wsum += res.best_ensemble.weights[i];
    avg += res.best_ensemble.weights[i] *
           galpha_c(res.best_ensemble.members[i], AlphaParam(0.5)).aggregate;
  }
  CHECK(wsum == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(avg - res.upper_bound) < 1e-10);
}

TEST_CASE("seed determinism and restart dominance") {
  RoofConfig one;
  one.restarts = 1;
  one.max_iterations = 400;
  one.seed = Seed{13};
  RoofConfig many = one;
  many.restarts = 8;

  const DensityMatrix rho = diagonal_ghz_mixture();
  const RoofResult a = estimate_convex_roof(rho, galphac_half(), many);
  const RoofResult b = estimate_convex_roof(rho, galphac_half(), many);
  CHECK(a.upper_bound == b.upper_bound);
  CHECK(a.iterations_used == b.iterations_used);

  const RoofResult single = estimate_convex_roof(rho, galphac_half(), one);
  CHECK(a.upper_bound <= single.upper_bound + 1e-15);
}

TEST_CASE("best value is non-increasing within the winning restart") {
  RoofConfig cfg;
  cfg.restarts = 2;
  cfg.max_iterations = 500;
  cfg.seed = Seed{29};
  const RoofResult res = estimate_convex_roof(diagonal_ghz_mixture(), galphac_half(), cfg);
  for (std::size_t i = 1; i < res.best_trace.size(); ++i)
    CHECK(res.best_trace[i] <= res.best_trace[i - 1] + 1e-15);
}
