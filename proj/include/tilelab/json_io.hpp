#pragma once

#include <json.hpp>

#include "tilelab/constructions.hpp"
#include "tilelab/fractional.hpp"
#include "tilelab/lattice.hpp"
#include "tilelab/partite.hpp"
#include "tilelab/thresholds.hpp"
#include "tilelab/tiling.hpp"

namespace tilelab {

// Stable key order keeps CLI output byte-identical across runs.
using Json = nlohmann::ordered_json;

Json to_json(const TilingCertificate& cert);
Json to_json(const ConstructionCertificate& cert);
Json to_json(const InvariantReport& report);
Json to_json(const ThresholdReport& report);
Json to_json(const FractionalTiling& h);
Json to_json(const FractionalReport& report);

FractionalTiling fractional_from_json(const Json& j);

}  // namespace tilelab
