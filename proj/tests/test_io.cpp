#include <doctest.h>

#include "gac/experiments.hpp"
#include "gac/io.hpp"

using namespace gac;
using nlohmann::json;

TEST_CASE("state JSON round trip") {
  const PureState psi = random_pure({2, 3}, Seed{3});
  const PureState back = state_from_json(state_to_json(psi));
  CHECK(back.local_dims() == psi.local_dims());
  CHECK((back.amplitudes() - psi.amplitudes()).norm() == 0.0);
}

TEST_CASE("density JSON round trip") {
  const DensityMatrix rho = DensityMatrix::projector(w(3));
  const DensityMatrix back = density_from_json(density_to_json(rho));
  CHECK((back.entries() - rho.entries()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("state schema matches the documented layout") {
  const json j = state_to_json(ghz(2));
  REQUIRE(j.contains("local_dims"));
  REQUIRE(j.contains("amplitudes"));
  CHECK(j["local_dims"] == json::array({2, 2}));
  CHECK(j["amplitudes"].size() == 4);
  CHECK(j["amplitudes"][0][0].get<double>() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(j["amplitudes"][0][1].get<double>() == 0.0);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(state_from_json(json{{"local_dims", {2, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(state_from_json(json::parse(R"({"local_dims":[2],"amplitudes":[[1,0]]})")),
                  std::invalid_argument);  // dim 1 party
  // non-normalized amplitudes violate the state invariant
  CHECK_THROWS_AS(
      state_from_json(json::parse(R"({"local_dims":[2],"amplitudes":[[1,0],[1,0]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(density_from_json(json{{"local_dims", {2}}}), std::invalid_argument);
  CHECK_THROWS_AS(load_state("/nonexistent/path.json"), std::invalid_argument);
}

TEST_CASE("builtin state ids parse") {
  CHECK(is_builtin_state("ghz:4"));
  CHECK(is_builtin_state("random:2x2x2:7"));
  CHECK_FALSE(is_builtin_state("some_file.json"));

  CHECK((parse_builtin_state("ghz:3").amplitudes() - ghz(3).amplitudes()).norm() == 0.0);
  CHECK(parse_builtin_state("w:4").num_parties() == 4);
  CHECK(parse_builtin_state("typeA:0.5").num_parties() == 3);
  CHECK(parse_builtin_state("fam4:1.2").num_parties() == 4);
  const PureState r = parse_builtin_state("random:2x3:11");
  CHECK(r.local_dims() == std::vector<int>{2, 3});
  CHECK((r.amplitudes() - random_pure({2, 3}, Seed{11}).amplitudes()).norm() == 0.0);
  CHECK_THROWS_AS(parse_builtin_state("ghz"), std::invalid_argument);
  CHECK_THROWS_AS(parse_builtin_state("nope:3"), std::invalid_argument);
}

TEST_CASE("report and roof-result JSON carry the expected fields") {
  const auto report = galpha_c(ghz(3), AlphaParam(0.5));
  const json j = report_to_json(report);
  CHECK(j["measure"] == "galphac(alpha=0.5)");
  CHECK(j["per_cut"].size() == 3);
  CHECK(j["per_cut"].contains("0|12"));
  CHECK(j["aggregate"].get<double>() == doctest::Approx(std::sqrt(2.0) - 1.0));

  RoofResult res;
  res.upper_bound = 0.25;
  res.converged = true;
  res.iterations_used = 10;
  res.best_ensemble = Ensemble{{1.0}, {ghz(3)}};
  const json rj = roof_result_to_json(res);
  CHECK(rj["upper_bound"] == 0.25);
  CHECK(rj["ensemble"].size() == 1);
  CHECK(rj["ensemble"][0]["weight"] == 1.0);
}
