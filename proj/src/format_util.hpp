#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dglift/field.hpp"

namespace dglift::detail {

/// Joins (coefficient, body) terms as "a - 2*b + c". An empty body is the unit.
inline std::string format_sum(const std::vector<std::pair<Scalar, std::string>>& terms,
                              const std::string& coeff_sep = "*") {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, body] : terms) {
    const bool neg = c.is_negative();
    const Scalar mag = neg ? -c : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (body.empty())
      out += mag.to_string();
    else if (mag.is_one())
      out += body;
    else
      out += mag.to_string() + coeff_sep + body;
    first = false;
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace dglift::detail
