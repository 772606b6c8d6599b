#pragma once

#include <cstdint>

#include "ascrl/sim/packet.hpp"
#include "ascrl/sim/time.hpp"

namespace ascrl::sim {

enum class EventKind : uint8_t {
  PacketArrival,
  LinkFree,
  TimerExpiry,
  DrlStep,
  StateReportDue,
};

const char* event_kind_name(EventKind k);

// Events are totally ordered by (fire_time, sequence_id); sequence_id is the
// insertion counter, so same-instant events run in scheduling order.
struct Event {
  SimTime fire_time;
  uint64_t sequence_id = 0;
  EventKind kind = EventKind::TimerExpiry;
  int channel = -1;        // PacketArrival / LinkFree
  Packet packet;           // PacketArrival
  uint32_t flow_id = 0;    // TimerExpiry / StateReportDue
  uint64_t timer_id = 0;   // TimerExpiry generation tag

  friend bool operator>(const Event& a, const Event& b) {
    if (a.fire_time != b.fire_time) return a.fire_time > b.fire_time;
    return a.sequence_id > b.sequence_id;
  }
};

}  // namespace ascrl::sim
