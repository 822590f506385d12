#pragma once

#include <string>

#include <json.hpp>

#include "catalog.hpp"
#include "derivation.hpp"
#include "lie.hpp"
#include "scan.hpp"

namespace deltader {

using Json = nlohmann::json;

// Rationals are strings "p/q" (or "p") everywhere in JSON.

/// { "dim", "brackets": [[i, j, k, "c"]...], "labels", "summands" }
Json algebra_to_json(const LieAlgebra& algebra);
LieAlgebra algebra_from_json(const Json& j);

/// { "dim", "action": [matrix per basis element], "weights"? }
Json module_to_json(const Representation& module);
Representation module_from_json(const Json& j, const AlgebraPtr& algebra);

/// { "delta", "dimension", "basis", "weights" }; weights is null unless graded.
Json space_to_json(const DerivationSpace& space);
std::string space_to_table(const DerivationSpace& space, const Representation& module);

/// { "generic_rank", "findings", "nonrational_factors", ... }
Json scan_to_json(const ScanReport& report);
std::string scan_to_table(const ScanReport& report);

Json verify_to_json(const VerifyReport& report);
std::string verify_to_table(const VerifyReport& report);

}  // namespace deltader
