#pragma once

#include <cstdint>

#include "ascrl/sim/time.hpp"
#include "ascrl/sim/topology.hpp"

namespace ascrl::sim {

enum class PacketKind : uint8_t { Data, Ack, Control };

constexpr uint32_t kMtuBytes = 1500;

struct Packet {
  uint32_t flow_id = 0;
  uint64_t seq = 0;       // byte offset; for Ack, the cumulative ack point
  uint32_t size = 0;      // on-wire bytes, <= MTU
  PacketKind kind = PacketKind::Data;
  SimTime send_time;      // stamped when the packet enters the network
  NodeId src = -1;
  NodeId dst = -1;
  bool retransmit = false;
  // Ack bookkeeping: echo of the data packet that triggered this ack, used
  // for RTT sampling (retransmits are excluded, Karn's rule).
  SimTime echo_send_time;
  bool echo_retransmit = false;
};

}  // namespace ascrl::sim
