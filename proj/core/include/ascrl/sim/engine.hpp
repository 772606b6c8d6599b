#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "ascrl/sim/event.hpp"
#include "ascrl/sim/link.hpp"
#include "ascrl/sim/packet.hpp"
#include "ascrl/sim/queue.hpp"
#include "ascrl/sim/time.hpp"
#include "ascrl/sim/topology.hpp"

namespace ascrl::sim {

struct TraceRow {
  SimTime t;
  EventKind kind;
  uint32_t flow_id;
  std::string detail;
};

// Ordered log of processed events; only populated when tracing is enabled.
class EventTrace {
 public:
  void add(SimTime t, EventKind k, uint32_t flow, std::string detail) {
    rows_.push_back({t, k, flow, std::move(detail)});
  }
  const std::vector<TraceRow>& rows() const { return rows_; }
  size_t size() const { return rows_.size(); }
  void write_csv(std::ostream& os) const;

 private:
  std::vector<TraceRow> rows_;
};

struct FlowCounters {
  uint64_t packets_sent = 0;
  uint64_t packets_delivered = 0;
  uint64_t packets_dropped = 0;
};

struct ChannelStats {
  uint64_t packets_forwarded = 0;
  uint64_t packets_dropped = 0;
  uint64_t bytes_serialized = 0;
};

// Deterministic single-threaded discrete-event engine. Owns the directed
// channels derived from the topology and moves packets hop by hop along
// precomputed shortest-path routes. Transport and application logic live
// outside; the engine calls back on host delivery and timer expiry.
//
// Determinism contract: events are processed in (fire_time, sequence_id)
// order where sequence_id is the scheduling counter, so identical inputs
// replay identically.
class Engine {
 public:
  using DeliverFn = std::function<void(const Packet&, SimTime)>;
  using EventFn = std::function<void(const Event&, SimTime)>;

  explicit Engine(Topology topo);

  SimTime now() const { return now_; }
  const Topology& topology() const { return topo_; }

  void set_deliver_handler(DeliverFn fn) { deliver_ = std::move(fn); }
  // Receives TimerExpiry and DrlStep events.
  void set_timer_handler(EventFn fn) { on_timer_ = std::move(fn); }

  // Stamps send_time and injects the packet at its source host.
  void send_from_host(NodeId host, Packet pkt);

  void schedule_timer(SimTime at, uint32_t flow_id, uint64_t timer_id);
  void schedule_drl_step(SimTime at);
  // Trace marker for a state report emitted at the current instant.
  void note_state_report(uint32_t flow_id);

  // Processes every event with fire_time <= t_end; clock ends at t_end.
  void run_until(SimTime t_end);

  void set_link_bandwidth(size_t link_index, double bps);
  void set_bottleneck_bandwidth(double bps);

  void enable_trace(bool on) { tracing_ = on; }
  const EventTrace& trace() const { return trace_; }

  const FlowCounters& flow_counters(uint32_t flow_id);
  const ChannelStats& channel_stats(size_t channel) const {
    return channels_[channel].stats;
  }
  size_t channel_count() const { return channels_.size(); }
  // Directed channel index for link `link_index`, direction a->b or b->a.
  size_t channel_index(size_t link_index, bool forward) const {
    return 2 * link_index + (forward ? 0 : 1);
  }
  size_t queued_packets(size_t channel) const {
    return channels_[channel].queue.size();
  }

  // Packets sent == delivered + dropped + still inside queues/serializers,
  // checked per flow against a walk over all channels.
  bool conservation_ok();

 private:
  struct Channel {
    size_t link_index;
    NodeId from, to;
    double bandwidth_bps;
    SimTime propagation;
    DropTailQueue queue;
    bool busy = false;  // a packet is being serialized right now
    ChannelStats stats;
  };

  void schedule(Event ev);
  void process(const Event& ev);
  void accept_packet(size_t channel, const Packet& pkt);
  void start_service(size_t channel);
  void arrive(size_t channel, const Packet& pkt);

  Topology topo_;
  std::vector<Channel> channels_;
  // next_channel_[node * node_count + dst] -> outgoing channel, or -1.
  std::vector<int> next_channel_;
  std::priority_queue<Event, std::vector<Event>, std::greater<Event>> queue_;
  SimTime now_;
  uint64_t next_sequence_id_ = 0;
  DeliverFn deliver_;
  EventFn on_timer_;
  bool tracing_ = false;
  EventTrace trace_;
  std::unordered_map<uint32_t, FlowCounters> flows_;
};

}  // namespace ascrl::sim
