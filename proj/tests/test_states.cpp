#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gac/measures.hpp"
#include "gac/states.hpp"

using namespace gac;

TEST_CASE("ghz constructor") {
  CHECK_THROWS_AS(ghz(1), std::invalid_argument);
  SUBCASE("n=2 is a Bell state") {
    const PureState bell = ghz(2);
    const Spectrum s = reduced_spectrum(bell, Bipartition({0}, 2));
    CHECK(s[0] == doctest::Approx(0.5));
  }
  SUBCASE("every cut of ghz(3) is balanced") {
    for (const auto& cut : enumerate_bipartitions(3).members) {
      const Spectrum s = reduced_spectrum(ghz(3), cut);
      CHECK(s[0] == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(s[1] == doctest::Approx(0.5).epsilon(1e-12));
    }
  }
  SUBCASE("n=10 has two nonzero amplitudes and unit norm") {
    const PureState big = ghz(10);
    int nonzero = 0;
    for (Eigen::Index i = 0; i < big.dim(); ++i)
      if (std::abs(big.amplitudes()[i]) > 0) ++nonzero;
    CHECK(nonzero == 2);
    CHECK(std::abs(big.amplitudes().norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("w constructor cut spectra follow the k-vs-rest two-point law") {
  CHECK_THROWS_AS(w(1), std::invalid_argument);
  for (int n : {2, 3, 5, 6}) {
    const PureState psi = w(n);
    for (const auto& cut : enumerate_bipartitions(n).members) {
      const int k = static_cast<int>(cut.parties().size());
      const Spectrum s = reduced_spectrum(psi, cut);
      CHECK(s[0] == doctest::Approx(double(std::max(k, n - k)) / n).epsilon(1e-10));
      CHECK(s[1] == doctest::Approx(double(std::min(k, n - k)) / n).epsilon(1e-10));
      for (std::size_t i = 2; i < s.size(); ++i) CHECK(s[i] == 0.0);
    }
  }
}

TEST_CASE("type_a and type_b endpoints") {
  CHECK_THROWS_AS(FamilyParam(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParam(2.0), std::invalid_argument);

  // type_b(0) = |000>, type_b(pi/4) = GHZ_3, type_a(0) = GHZ_3
  CHECK(galpha_c(type_b(FamilyParam(0.0)), AlphaParam(0.5)).aggregate == 0.0);
  CHECK((type_b(FamilyParam(std::numbers::pi / 4)).amplitudes() -
         ghz(3).amplitudes()).norm() < 1e-12);
  CHECK((type_a(FamilyParam(0.0)).amplitudes() - ghz(3).amplitudes()).norm() < 1e-12);
}

TEST_CASE("four_qubit_family endpoints are biseparable") {
  const AlphaParam half(0.5);
  CHECK(galpha_c(four_qubit_family(FamilyParam(0.0)), half).aggregate == 0.0);
  CHECK(galpha_c(four_qubit_family(FamilyParam(std::numbers::pi / 2)), half).aggregate ==
        0.0);
  // interior points are genuinely entangled
  CHECK(galpha_c(four_qubit_family(FamilyParam(0.866)), half).aggregate > 0.1);
}

TEST_CASE("random_pure is deterministic per seed and normalized") {
  const PureState a = random_pure({2, 3, 2}, Seed{42});
  const PureState b = random_pure({2, 3, 2}, Seed{42});
  const PureState c = random_pure({2, 3, 2}, Seed{43});
  CHECK((a.amplitudes() - b.amplitudes()).norm() == 0.0);
  CHECK((a.amplitudes() - c.amplitudes()).norm() > 1e-3);
  CHECK(std::abs(a.amplitudes().norm() - 1.0) < 1e-12);
}

TEST_CASE("Haar samples are generically genuinely entangled") {
  double total = 0;
  for (std::uint64_t s = 0; s < 50; ++s)
    total += galpha_c(random_pure({2, 2, 2}, Seed{s}), AlphaParam(0.5)).aggregate;
  CHECK(total / 50 > 0.05);
}

TEST_CASE("random_unitary is unitary and seed-stable") {
  const Eigen::MatrixXcd u = random_unitary(4, Seed{9});
  CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((u - random_unitary(4, Seed{9})).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("perturb respects the requested projector distance") {
  CHECK_THROWS_AS(perturb(ghz(3), -0.5, Seed{1}), std::invalid_argument);

  const PureState psi = ghz(3);
  const PureState same = perturb(psi, 0.0, Seed{2});
  CHECK((same.amplitudes() - psi.amplitudes()).norm() == 0.0);
  CHECK(projector_distance(psi, same) < 1e-12);

  std::mt19937_64 seq(77);
  std::uniform_real_distribution<double> eps_dist(0.0, 1.5);
  for (int t = 0; t < 200; ++t) {
    const double eps = eps_dist(seq);
    const PureState base = random_pure({2, 2, 2}, Seed{seq()});
    const PureState moved = perturb(base, eps, Seed{seq()});
    CHECK(projector_distance(base, moved) <= eps + 1e-12);
    // the distance should also be essentially achieved, not just bounded
    if (eps > 1e-3) CHECK(projector_distance(base, moved) > 0.9 * eps);
  }
}
