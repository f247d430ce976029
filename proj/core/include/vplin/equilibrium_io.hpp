#pragma once

#include <string>

#include "vplin/equilibrium.hpp"

namespace vplin {

/// Loads an equilibrium from a JSON file:
///   {"kind": "maxwellian"}
///   {"kind": {"generalized_poisson": j}}
///   {"kind": "custom", "theta": t, "d": d, "data": "table.csv"}
/// Custom tables (CSV rows r,m0) are interpolated on the real axis only;
/// evaluation off the axis throws DomainError.
RadialEquilibrium load_equilibrium(const std::string& path);

/// Same, from an already-parsed JSON string.
RadialEquilibrium parse_equilibrium(const std::string& json_text,
                                    const std::string& base_dir = ".");

}  // namespace vplin
