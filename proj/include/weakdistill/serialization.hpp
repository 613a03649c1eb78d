#pragma once

#include <nlohmann/json.hpp>

#include "weakdistill/states.hpp"

namespace weakdistill {

using json = nlohmann::ordered_json;

// Schemas:
//   SchmidtState    {"alpha": r, "beta": r, "dim_b": n}
//   TwoQubitDensity {"matrix": [[ [re, im] x4 ] x4]}  (row-major, A-first)
//   LSDecomposition {"lambda": r, "separable": <density>, "pure": <schmidt>}

json to_json(const SchmidtState& s);
json to_json(const TwoQubitDensity& rho);
json to_json(const LSDecomposition& dec);

SchmidtState schmidt_from_json(const json& j);
TwoQubitDensity density_from_json(const json& j);
LSDecomposition ls_from_json(const json& j);

}  // namespace weakdistill
