#pragma once

#include "silverstern/quadfield.hpp"

#include <json.hpp>

#include <string>

namespace silverstern {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits serialize as JSON numbers, wider ones as
/// decimal strings; both forms load back exactly.
json json_of(const Int& v);
Int int_from_json(const json& j, const std::string& field);

/// QuadInt as the two-element array [a, b].
json json_of(const QuadInt& v);

/// QuadRat as {"num": [a, b], "den": d}.
json json_of(const QuadRat& v);

/// Accepts the full object form, a bare integer, or a bare [a, b] array.
QuadRat quadrat_from_json(const json& j, const std::string& field);

/// Fixed "%.12g" float rendering used by every CSV and text emitter.
std::string format_float(double v);

}  // namespace silverstern
