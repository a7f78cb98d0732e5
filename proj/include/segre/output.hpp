#pragma once
/*
 * Machine-readable emission helpers. JSON integer fields outside the
 * window exactly representable by IEEE doubles (|v| <= 2^53) are emitted
 * as decimal strings; CSV always uses decimal strings.
 */

#include <json.hpp>
#include <segre/graded_ring.hpp>

#include <sstream>

namespace segre {

using Json = nlohmann::json;

inline Json json_int(const Int& v) {
  static const Int window = Int(1) << 53;
  if (v >= -window && v <= window)
    return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

inline Json json_valuation(const Valuation& v) {
  if (v.is_infinite()) return Json("inf");
  return Json(v.value());
}

/// Exponent-vector key of a monomial: comma-joined exponents, e.g. "2,1".
inline std::string monomial_key(const Monomial& m) {
  std::string key;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(m[i]);
  }
  return key;
}

/// {monomial-exponents: coefficient} map of a ring element.
inline Json json_element(const RingElement& x) {
  Json obj = Json::object();
  for (const auto& [mono, coeff] : x.coefficients())
    obj[monomial_key(mono)] = json_int(coeff);
  return obj;
}

/// One CSV line; fields are numeric or enum-like, so no quoting is ever
/// needed.
inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    row += fields[i];
  }
  row += '\n';
  return row;
}

}  // namespace segre
