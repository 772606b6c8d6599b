#pragma once

#include <cmath>
#include <cstdint>

#include "ascrl/sim/time.hpp"

namespace ascrl::sim {

// Point-to-point link parameters. Queues are drop-tail, sized in packets.
struct LinkSpec {
  double bandwidth_bps = 10e6;
  SimTime propagation_delay = SimTime::from_ms(5);
  int queue_capacity = 16;
};

// Serialization delay for `size_bytes` on a link of the given bandwidth.
inline SimTime transmit_delay(const LinkSpec& link, uint32_t size_bytes) {
  if (size_bytes == 0) return SimTime::zero();
  const double ns = static_cast<double>(size_bytes) * 8.0 * 1e9 / link.bandwidth_bps;
  return SimTime::from_ns(static_cast<int64_t>(std::llround(ns)));
}

}  // namespace ascrl::sim
