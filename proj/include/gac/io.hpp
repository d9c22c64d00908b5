#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gac/convex_roof.hpp"
#include "gac/core.hpp"
#include "gac/measures.hpp"

namespace gac {

// JSON schemas (amplitudes/entries as [re, im] pairs, party 0 most
// significant in the flat index):
//   state:   {"local_dims": [2,2,2], "amplitudes": [[re,im], ...]}
//   density: {"local_dims": [2,2],   "entries": [[[re,im], ...], ...]}  (row-major)

PureState state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const PureState& psi);

DensityMatrix density_from_json(const nlohmann::json& j);
nlohmann::json density_to_json(const DensityMatrix& rho);

PureState load_state(const std::string& path);
DensityMatrix load_density(const std::string& path);

nlohmann::json report_to_json(const GmeReport& report);
nlohmann::json roof_result_to_json(const RoofResult& result);

}  // namespace gac
