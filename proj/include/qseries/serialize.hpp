#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qseries/series.hpp"

namespace qseries {

/// One line per coefficient, "n<TAB>c", for n = 0 .. order.
std::string to_text(const Series& s);
/// Inverse of to_text. Exponents must run 0, 1, 2, ... without gaps.
Series series_from_text(std::string_view text);

/// {"order": N, "modulus": m (only when present), "coeffs": [...]}.
/// Coefficients are written as decimal strings so big values stay exact.
nlohmann::ordered_json to_json(const Series& s);
/// Accepts coefficients given as JSON integers or decimal strings.
Series series_from_json(const nlohmann::json& doc);

} // namespace qseries
