#include "gac/io.hpp"

#include <fstream>

namespace gac {

namespace {

using nlohmann::json;

Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("complex entries must be [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json complex_to(Complex z) { return json::array({z.real(), z.imag()}); }

std::vector<int> dims_from(const json& j) {
  if (!j.contains("local_dims") || !j["local_dims"].is_array())
    throw std::invalid_argument("missing local_dims array");
  return j["local_dims"].get<std::vector<int>>();
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace

PureState state_from_json(const json& j) {
  const auto dims = dims_from(j);
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
    throw std::invalid_argument("missing amplitudes array");
  const auto& arr = j["amplitudes"];
  Eigen::VectorXcd amps(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) amps[i] = complex_from(arr[i]);
  return PureState(std::move(amps), dims);
}

json state_to_json(const PureState& psi) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.dim(); ++i)
    amps.push_back(complex_to(psi.amplitudes()[i]));
  return json{{"local_dims", psi.local_dims()}, {"amplitudes", std::move(amps)}};
}

DensityMatrix density_from_json(const json& j) {
  const auto dims = dims_from(j);
  if (!j.contains("entries") || !j["entries"].is_array())
    throw std::invalid_argument("missing entries array");
  const auto& rows = j["entries"];
  Eigen::MatrixXcd m(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != rows.size())
      throw std::invalid_argument("entries must be a square nested array");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = complex_from(rows[r][c]);
  }
  return DensityMatrix(std::move(m), dims);
}

json density_to_json(const DensityMatrix& rho) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < rho.dim(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < rho.dim(); ++c) row.push_back(complex_to(rho.entries()(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"local_dims", rho.local_dims()}, {"entries", std::move(rows)}};
}

PureState load_state(const std::string& path) { return state_from_json(parse_file(path)); }

DensityMatrix load_density(const std::string& path) {
  return density_from_json(parse_file(path));
}

json report_to_json(const GmeReport& report) {
  json per_cut = json::object();
  for (const auto& [cut, value] : report.per_cut) per_cut[cut.to_string()] = value;
  json out{{"measure", report.label()},
           {"aggregate", report.aggregate},
           {"per_cut", std::move(per_cut)}};
  if (report.product) out["product"] = *report.product;
  return out;
}

json roof_result_to_json(const RoofResult& result) {
  json members = json::array();
  for (std::size_t i = 0; i < result.best_ensemble.members.size(); ++i) {
    json m = state_to_json(result.best_ensemble.members[i]);
    m["weight"] = result.best_ensemble.weights[i];
    members.push_back(std::move(m));
  }
  return json{{"upper_bound", result.upper_bound},
              {"iterations_used", result.iterations_used},
              {"converged", result.converged},
              {"ensemble", std::move(members)}};
}

}  // namespace gac
