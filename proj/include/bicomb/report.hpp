#pragma once

#include <string>

#include <json.hpp>

#include "bicomb/verify.hpp"

namespace bicomb {

/// JSON form of a property report:
///
///   {
///     "property": "conical",
///     "bicombing": "sigma_X1",
///     "passed": true,
///     "worst_violation": 0.0,
///     "tolerance": 1e-09,
///     "samples": 660000,
///     "seed": 42,
///     "witness": null | {
///       "points": [[x, y], ...],
///       "param_names": ["t"],
///       "params": [0.5],
///       "violation": 0.25
///     }
///   }
nlohmann::json to_json(const PropertyReport& report);
PropertyReport report_from_json(const nlohmann::json& j);

}  // namespace bicomb
