#pragma once

#include <deque>

#include "ascrl/sim/packet.hpp"

namespace ascrl::sim {

enum class EnqueueResult : uint8_t { Enqueued, Dropped };

// FIFO drop-tail queue sized in packets.
class DropTailQueue {
 public:
  explicit DropTailQueue(int capacity_packets) : capacity_(capacity_packets) {}

  EnqueueResult enqueue(const Packet& p) {
    if (static_cast<int>(q_.size()) >= capacity_) return EnqueueResult::Dropped;
    q_.push_back(p);
    return EnqueueResult::Enqueued;
  }

  bool empty() const { return q_.empty(); }
  size_t size() const { return q_.size(); }
  int capacity() const { return capacity_; }

  Packet pop() {
    Packet p = q_.front();
    q_.pop_front();
    return p;
  }

 private:
  int capacity_;
  std::deque<Packet> q_;
};

}  // namespace ascrl::sim
