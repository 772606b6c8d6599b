#pragma once

#include <compare>
#include <cstdint>

namespace ascrl::sim {

// Simulation clock value, integer nanoseconds since simulation start.
// Integer so that event ordering never depends on floating-point rounding.
struct SimTime {
  int64_t ns = 0;

  static constexpr SimTime zero() { return {0}; }
  static constexpr SimTime from_ns(int64_t v) { return {v}; }
  static constexpr SimTime from_us(int64_t v) { return {v * 1000}; }
  static constexpr SimTime from_ms(int64_t v) { return {v * 1'000'000}; }
  static constexpr SimTime from_seconds(double s) {
    return {static_cast<int64_t>(s * 1e9 + 0.5)};
  }

  constexpr double seconds() const { return static_cast<double>(ns) * 1e-9; }

  friend constexpr SimTime operator+(SimTime a, SimTime b) { return {a.ns + b.ns}; }
  friend constexpr SimTime operator-(SimTime a, SimTime b) { return {a.ns - b.ns}; }
  constexpr SimTime& operator+=(SimTime o) {
    ns += o.ns;
    return *this;
  }
  friend constexpr auto operator<=>(SimTime a, SimTime b) = default;
};

}  // namespace ascrl::sim
