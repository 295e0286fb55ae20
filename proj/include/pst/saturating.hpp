#pragma once

#include <algorithm>
#include <cstdint>

namespace pst {

// Symbol counts and depths stop growing at 2^31 - 1. Saturation is sticky:
// once an operand reaches the cap every result involving it stays at the cap.
inline constexpr std::int64_t kCountCap = (std::int64_t{1} << 31) - 1;

constexpr std::int64_t sat(std::int64_t v) { return std::min(v, kCountCap); }

constexpr std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= kCountCap || b >= kCountCap) return kCountCap;
  return sat(a + b);
}

constexpr std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a >= kCountCap || b >= kCountCap) return kCountCap;
  if (a > kCountCap / b) return kCountCap;
  return sat(a * b);
}

}  // namespace pst
