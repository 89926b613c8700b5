#include "silverstern/json_values.hpp"

#include "silverstern/errors.hpp"

#include <cstdio>
#include <limits>

namespace silverstern {

json json_of(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

Int int_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError(field + ": not a decimal integer string");
    }
  }
  throw ParseError(field + ": expected an integer");
}

json json_of(const QuadInt& v) { return json::array({json_of(v.a), json_of(v.b)}); }

json json_of(const QuadRat& v) {
  return json{{"num", json_of(v.num)}, {"den", json_of(v.den)}};
}

namespace {

QuadInt quadint_from_array(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || j.size() > 2)
    throw ParseError(field + ": expected an array of 1 or 2 integers");
  Int a = int_from_json(j[0], field + "[0]");
  Int b = j.size() == 2 ? int_from_json(j[1], field + "[1]") : Int(0);
  return {std::move(a), std::move(b)};
}

}  // namespace

QuadRat quadrat_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer() || j.is_number_unsigned() || j.is_string())
    return QuadRat(QuadInt(int_from_json(j, field), 0));
  if (j.is_array()) return QuadRat(quadint_from_array(j, field));
  if (j.is_object()) {
    if (!j.contains("num")) throw ParseError(field + ".num: required");
    QuadInt num = quadint_from_array(j.at("num"), field + ".num");
    Int den = 1;
    if (j.contains("den")) {
      den = int_from_json(j.at("den"), field + ".den");
      if (den <= 0) throw ParseError(field + ".den: must be a positive integer");
    }
    return QuadRat(std::move(num), std::move(den));
  }
  throw ParseError(field + ": expected an integer, [a, b] array, or {num, den} object");
}

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace silverstern
