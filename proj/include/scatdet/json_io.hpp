#pragma once

#include <json.hpp>

#include "scatdet/divisor.hpp"
#include "scatdet/scattering.hpp"
#include "scatdet/superzeta.hpp"
#include "scatdet/surface.hpp"

namespace scatdet {

/// JSON form: {"genus": int, "cusps": int, "elliptic_orders": [int]}
surface::GroupDescriptor descriptorFromJson(const nlohmann::json& j);
nlohmann::json descriptorToJson(const surface::GroupDescriptor& desc);

/// JSON form: {"family": "modular"|"gamma0"|"gamma0plus", "primes": [int]}
scattering::ScatteringFamily familyFromJson(const nlohmann::json& j);
nlohmann::json familyToJson(const scattering::ScatteringFamily& family);

/// JSON form: {"kind": "finite", "zeros": [[re, im, mult]]}
///         or {"kind": "progression", "start": real, "step": real}
superzeta::ZeroSet zeroSetFromJson(const nlohmann::json& j);
nlohmann::json zeroSetToJson(const superzeta::ZeroSet& zs);

nlohmann::json divisorCountToJson(const divisor::DivisorCount& dc);

}  // namespace scatdet
