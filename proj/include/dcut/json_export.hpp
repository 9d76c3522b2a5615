#pragma once

#include <json.hpp>

#include "dcut/gadgets.hpp"
#include "dcut/reduction.hpp"
#include "dcut/structured_solver.hpp"

namespace dcut {

// All vertex and variable ids in these documents are 1-indexed, matching the
// text file formats.

nlohmann::json to_json(const SeedReport& report);
nlohmann::json to_json(const GadgetLabels& labels);
nlohmann::json to_json(const ReductionMap& map);

}  // namespace dcut
