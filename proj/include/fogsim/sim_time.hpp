#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>

namespace fogsim {

inline constexpr uint64_t kUsPerSec = 1'000'000;

// Virtual clock instant in integer microseconds. Integer time keeps event
// ordering exact and runs reproducible across builds.
struct SimTime {
  uint64_t us = 0;

  constexpr auto operator<=>(const SimTime&) const = default;

  constexpr SimTime operator+(uint64_t delta_us) const { return SimTime{us + delta_us}; }
  constexpr SimTime& operator+=(uint64_t delta_us) {
    us += delta_us;
    return *this;
  }
  constexpr uint64_t operator-(SimTime earlier) const { return us - earlier.us; }

  constexpr double seconds() const { return static_cast<double>(us) / kUsPerSec; }
};

inline constexpr SimTime kTimeZero{0};
inline constexpr SimTime kTimeMax{std::numeric_limits<uint64_t>::max()};

constexpr SimTime from_us(uint64_t us) { return SimTime{us}; }

inline SimTime from_seconds(double s) {
  return SimTime{static_cast<uint64_t>(std::llround(s * static_cast<double>(kUsPerSec)))};
}

}  // namespace fogsim
