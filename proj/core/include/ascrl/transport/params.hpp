#pragma once

#include <cstdint>

#include "ascrl/sim/time.hpp"

namespace ascrl::transport {

enum class CcKind : uint8_t { AscRl, NewReno, Cubic, FixedCwnd };

struct TransportParams {
  uint32_t mss_payload = 1448;   // bytes of application payload per segment
  uint32_t header_bytes = 52;    // per-packet header on the wire
  uint32_t ack_bytes = 52;       // pure ack size on the wire
  uint32_t cwnd_max_mss = 256;   // upper clamp for externally set windows
  sim::SimTime min_rto = sim::SimTime::from_ms(200);
  double srtt_gain = 0.125;      // EWMA gain for the smoothed RTT
  double cubic_c = 0.4;          // cubic growth constant, MSS/s^3
  double cubic_beta = 0.7;       // multiplicative decrease factor

  uint32_t wire_size() const { return mss_payload + header_bytes; }
  uint64_t cwnd_max_bytes() const {
    return static_cast<uint64_t>(cwnd_max_mss) * mss_payload;
  }
};

// ON/OFF burst application source. The flow sends continuously during ON
// phases and is silent during OFF phases, repeating from start_time.
struct AppTrafficSpec {
  double on_duration_s = 5.0;
  double off_duration_s = 1.0;
  sim::SimTime start_time = sim::SimTime::zero();
};

}  // namespace ascrl::transport
