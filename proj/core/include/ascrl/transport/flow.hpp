#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ascrl/sim/packet.hpp"
#include "ascrl/sim/time.hpp"
#include "ascrl/sim/topology.hpp"
#include "ascrl/transport/params.hpp"

namespace ascrl::transport {

struct AckOutcome {
  double rtt_sample_s = -1.0;  // < 0 when the ack produced no sample
  uint64_t newly_acked_bytes = 0;
  int dupack_count = 0;
  bool loss_event = false;
  bool stale = false;
};

struct FlowState {
  uint32_t flow_id = 0;
  uint16_t app_id = 0;
  CcKind cc_kind = CcKind::NewReno;
  uint64_t cwnd = 0;             // payload bytes
  uint64_t bytes_in_flight = 0;  // payload bytes sent but not yet acked
  double srtt_s = 0.0;           // 0 until the first sample
  uint64_t acked_segments_step = 0;
  uint64_t loss_events = 0;      // cumulative, fast-retransmit + RTO
};

// Counters for one DRL step, reset by take_step().
struct StepCounters {
  uint64_t acked_segments = 0;
  uint64_t acked_bytes = 0;
  uint64_t delivered_payload_bytes = 0;  // receiver side, unique in-order
  uint64_t data_packets_sent = 0;        // new + retransmitted
  uint64_t loss_events = 0;
  double rtt_sample_mean_s = -1.0;  // mean of samples this step, < 0 if none
  std::vector<double> rtt_samples_s;
};

// One reliable byte stream: sender and receiver endpoints of a single flow.
// Cumulative acks, fast retransmit on the third duplicate ack, partial-ack
// retransmission while recovering, and a conventional RTO. The congestion
// window policy is selected by CcKind; AscRl and FixedCwnd windows are set
// externally through set_cwnd().
class Flow {
 public:
  Flow(uint32_t flow_id, uint16_t app_id, sim::NodeId src, sim::NodeId dst,
       CcKind kind, TransportParams params, AppTrafficSpec traffic);

  // Segments to transmit now: pending retransmits first (these ignore the
  // ON/OFF gate), then new data while bytes_in_flight < cwnd.
  std::vector<sim::Packet> pump(sim::SimTime now);

  // Receiver endpoint: returns the cumulative ack for an incoming segment.
  std::optional<sim::Packet> on_data(const sim::Packet& data, sim::SimTime now);

  AckOutcome on_ack(const sim::Packet& ack, sim::SimTime now);

  // Retransmission timeout check. A no-op unless the armed deadline passed.
  void on_timer(sim::SimTime now);
  std::optional<sim::SimTime> rto_deadline() const { return rto_deadline_; }

  // AscRl / FixedCwnd only; clamps to [1 MSS, cwnd_max].
  void set_cwnd(uint64_t cwnd_bytes);

  bool sending_allowed(sim::SimTime now) const;

  StepCounters take_step();

  const FlowState& state() const { return state_; }
  const TransportParams& params() const { return params_; }
  sim::NodeId src() const { return src_; }
  sim::NodeId dst() const { return dst_; }
  uint64_t next_seq() const { return next_seq_; }
  uint64_t snd_una() const { return snd_una_; }
  uint64_t rcv_next() const { return rcv_next_; }
  uint64_t total_data_packets_sent() const { return total_data_packets_sent_; }
  uint64_t delivered_payload_total() const { return rcv_next_; }
  double current_rto_s() const;

  // Test hooks for scripted congestion-control traces.
  void force_cwnd(uint64_t bytes) { state_.cwnd = bytes; }
  void force_ssthresh(uint64_t bytes) { ssthresh_ = bytes; }
  uint64_t ssthresh() const { return ssthresh_; }
  bool in_recovery() const { return in_recovery_; }

 private:
  struct Segment {
    uint32_t len = 0;
    sim::SimTime sent_at;
    bool retransmitted = false;
  };

  void on_loss_event(sim::SimTime now);
  void on_rto_event(sim::SimTime now);
  void grow_window(uint64_t newly_acked, sim::SimTime now);
  void queue_retransmit(uint64_t seq);
  void arm_rto(sim::SimTime now);
  sim::Packet make_data_packet(uint64_t seq, bool retransmit, sim::SimTime now);

  uint32_t flow_id_;
  sim::NodeId src_, dst_;
  TransportParams params_;
  AppTrafficSpec traffic_;
  FlowState state_;

  // Sender.
  uint64_t next_seq_ = 0;
  uint64_t snd_una_ = 0;
  std::map<uint64_t, Segment> outstanding_;
  std::vector<uint64_t> retx_pending_;
  int dupacks_ = 0;
  bool in_recovery_ = false;
  uint64_t recover_ = 0;
  uint64_t ssthresh_;
  uint64_t bytes_acked_round_ = 0;  // NewReno congestion-avoidance credit
  double cubic_w_max_mss_ = 0.0;
  sim::SimTime cubic_epoch_;
  bool cubic_in_epoch_ = false;
  std::optional<sim::SimTime> rto_deadline_;
  int rto_backoff_ = 1;
  uint64_t total_data_packets_sent_ = 0;

  // Receiver.
  uint64_t rcv_next_ = 0;
  std::map<uint64_t, uint32_t> out_of_order_;

  StepCounters step_;
};

}  // namespace ascrl::transport
