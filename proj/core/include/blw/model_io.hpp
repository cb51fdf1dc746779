#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "blw/lbm.hpp"

namespace blw {

/// Model files are JSON of the shape
///   { "worlds": k, "denominator": n, "valuation": { "p": [a0, ...], ... } }
/// where entry a_i is an integer numerator for the value a_i/n. The
/// loader rejects numerators outside [0, n], wrong-length arrays and
/// valuations that violate the sloping condition; unknown keys (such as
/// the "world" field of an emitted countermodel) are ignored. Errors are
/// std::invalid_argument or nlohmann's parse exceptions.
LBMStructure load_model(const std::string& json_text);

/// Writes the same shape with the least common denominator of all values.
/// With `world` present, adds a "world" field (countermodel output).
std::string save_model(const LBMStructure& m,
                       std::optional<std::size_t> world = std::nullopt);

}  // namespace blw
