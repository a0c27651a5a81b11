#pragma once

#include <algorithm>
#include <limits>
#include <string>

namespace socle {

/// Graded degrees with the empty-module sentinels beg(0) = +inf and en(0) = -inf.
using Degree = int;

inline constexpr Degree kPlusInfinity = std::numeric_limits<int>::max();
inline constexpr Degree kMinusInfinity = std::numeric_limits<int>::min();

inline bool isFinite(Degree d) { return d != kPlusInfinity && d != kMinusInfinity; }

inline std::string degreeToString(Degree d) {
  if (d == kPlusInfinity) return "inf";
  if (d == kMinusInfinity) return "-inf";
  return std::to_string(d);
}

inline Degree negateDegree(Degree d) {
  if (d == kPlusInfinity) return kMinusInfinity;
  if (d == kMinusInfinity) return kPlusInfinity;
  return -d;
}

}  // namespace socle
