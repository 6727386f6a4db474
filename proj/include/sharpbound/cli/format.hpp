// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

#include <json.hpp>

namespace sharpbound::cli {

/// Shortest decimal that parses back to the same double, with ".0" appended
/// to integral values. Infinities print as "inf" / "-inf".
inline std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

/// Six significant digits, for text output.
inline std::string format_text(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

/// JSON has no infinity; those are emitted as strings.
inline nlohmann::json json_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

/// Parses a whole string as a real. "inf" and "infinity" (any case, optional
/// sign) are accepted only when `allow_infinity`; "nan" parses to NaN so the
/// library can reject it as a domain error.
inline std::optional<double> parse_real(std::string_view text, bool allow_infinity) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  std::string body = lowercase(text);
  double sign = 1.0;
  std::string_view unsigned_body = body;
  if (unsigned_body.front() == '+' || unsigned_body.front() == '-') {
    sign = unsigned_body.front() == '-' ? -1.0 : 1.0;
    unsigned_body.remove_prefix(1);
  }
  if (unsigned_body == "inf" || unsigned_body == "infinity") {
    if (!allow_infinity) return std::nullopt;
    return sign * std::numeric_limits<double>::infinity();
  }
  if (unsigned_body == "nan") return std::numeric_limits<double>::quiet_NaN();
  double value = 0.0;
  const char* first = body.data();
  if (*first == '+') ++first;
  const char* last = body.data() + body.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) return std::nullopt;
  return value;
}

}  // namespace sharpbound::cli
