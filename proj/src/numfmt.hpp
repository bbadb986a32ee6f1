#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace podo::detail {

// Decimal rendering of v / div with at most four fraction digits, trailing
// zeros trimmed. Pure integer arithmetic so every platform prints the same.
inline std::string format_ratio(std::int64_t v, std::int64_t div) {
  if (div <= 0) div = 1;
  const bool neg = v < 0;
  const std::uint64_t mag = neg ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
  const std::uint64_t d = static_cast<std::uint64_t>(div);
  // round half away from zero at 1e-4
  const std::uint64_t scaled = (mag * 10000 + d / 2) / d;
  std::uint64_t whole = scaled / 10000;
  std::uint64_t frac = scaled % 10000;
  std::string out;
  if (neg && scaled != 0) out += '-';
  out += std::to_string(whole);
  if (frac != 0) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%04u", static_cast<unsigned>(frac));
    std::string f(buf);
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += '.' + f;
  }
  return out;
}

// Same for a double already in output units; rounded to 1e-4 first.
inline std::string format_double(double v) {
  const double r = std::round(v * 10000.0);
  return format_ratio(static_cast<std::int64_t>(r), 10000);
}

}  // namespace podo::detail
