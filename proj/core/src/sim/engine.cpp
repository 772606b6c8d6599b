#include "ascrl/sim/engine.hpp"

#include <cassert>
#include <cstdio>
#include <ostream>
#include <queue>
#include <stdexcept>

namespace ascrl::sim {

const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::PacketArrival: return "packet_arrival";
    case EventKind::LinkFree: return "link_free";
    case EventKind::TimerExpiry: return "timer_expiry";
    case EventKind::DrlStep: return "drl_step";
    case EventKind::StateReportDue: return "state_report_due";
  }
  return "unknown";
}

void EventTrace::write_csv(std::ostream& os) const {
  os << "time_s,event,flow,detail\n";
  char buf[32];
  for (const auto& r : rows_) {
    std::snprintf(buf, sizeof(buf), "%.9f", r.t.seconds());
    os << buf << ',' << event_kind_name(r.kind) << ',' << r.flow_id << ','
       << r.detail << '\n';
  }
}

Engine::Engine(Topology topo) : topo_(std::move(topo)) {
  channels_.reserve(topo_.links.size() * 2);
  for (size_t i = 0; i < topo_.links.size(); ++i) {
    const Link& l = topo_.links[i];
    channels_.push_back({i, l.a, l.b, l.spec.bandwidth_bps, l.spec.propagation_delay,
                         DropTailQueue(l.spec.queue_capacity), false, {}});
    channels_.push_back({i, l.b, l.a, l.spec.bandwidth_bps, l.spec.propagation_delay,
                         DropTailQueue(l.spec.queue_capacity), false, {}});
  }

  // Hop-by-hop routes: one BFS per destination, neighbors visited in channel
  // order so path choice is deterministic (no ECMP).
  const size_t n = topo_.node_count();
  std::vector<std::vector<std::pair<NodeId, int>>> adj(n);  // (neighbor, channel)
  for (size_t c = 0; c < channels_.size(); ++c)
    adj[channels_[c].from].emplace_back(channels_[c].to, static_cast<int>(c));

  next_channel_.assign(n * n, -1);
  for (NodeId dst = 0; dst < static_cast<NodeId>(n); ++dst) {
    std::vector<int> hops(n, -1);
    std::queue<NodeId> q;
    q.push(dst);
    hops[dst] = 0;
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      for (const auto& [v, ch] : adj[u]) {
        (void)ch;
        if (hops[v] == -1) {
          hops[v] = hops[u] + 1;
          q.push(v);
        }
      }
    }
    for (NodeId u = 0; u < static_cast<NodeId>(n); ++u) {
      if (u == dst || hops[u] == -1) continue;
      for (const auto& [v, ch] : adj[u]) {
        if (hops[v] == hops[u] - 1) {
          next_channel_[u * n + dst] = ch;
          break;
        }
      }
    }
  }
}

void Engine::schedule(Event ev) {
  assert(ev.fire_time >= now_ && "event scheduled in the past");
  ev.sequence_id = next_sequence_id_++;
  queue_.push(std::move(ev));
}

void Engine::send_from_host(NodeId host, Packet pkt) {
  if (!topo_.is_host(host)) throw std::logic_error("packets originate at hosts");
  pkt.send_time = now_;
  flows_[pkt.flow_id].packets_sent++;
  if (pkt.dst == host) {  // degenerate loopback, deliver immediately
    flows_[pkt.flow_id].packets_delivered++;
    if (deliver_) deliver_(pkt, now_);
    return;
  }
  const int ch = next_channel_[host * topo_.node_count() + pkt.dst];
  if (ch < 0) throw std::logic_error("no route from host to destination");
  accept_packet(static_cast<size_t>(ch), pkt);
}

void Engine::accept_packet(size_t channel, const Packet& pkt) {
  Channel& c = channels_[channel];
  if (c.queue.enqueue(pkt) == EnqueueResult::Dropped) {
    c.stats.packets_dropped++;
    flows_[pkt.flow_id].packets_dropped++;
    if (tracing_)
      trace_.add(now_, EventKind::PacketArrival, pkt.flow_id,
                 "drop ch" + std::to_string(channel));
    return;
  }
  if (!c.busy) start_service(channel);
}

void Engine::start_service(size_t channel) {
  Channel& c = channels_[channel];
  assert(!c.queue.empty());
  c.busy = true;
  const Packet pkt = c.queue.pop();
  LinkSpec spec{c.bandwidth_bps, c.propagation, c.queue.capacity()};
  const SimTime ser = transmit_delay(spec, pkt.size);
  c.stats.bytes_serialized += pkt.size;
  c.stats.packets_forwarded++;
  schedule({now_ + ser, 0, EventKind::LinkFree, static_cast<int>(channel), {}, 0, 0});
  schedule({now_ + ser + c.propagation, 0, EventKind::PacketArrival,
            static_cast<int>(channel), pkt, 0, 0});
}

void Engine::arrive(size_t channel, const Packet& pkt) {
  const Channel& c = channels_[channel];
  const NodeId node = c.to;
  if (node == pkt.dst) {
    flows_[pkt.flow_id].packets_delivered++;
    if (tracing_)
      trace_.add(now_, EventKind::PacketArrival, pkt.flow_id, "deliver");
    if (deliver_) deliver_(pkt, now_);
    return;
  }
  if (tracing_)
    trace_.add(now_, EventKind::PacketArrival, pkt.flow_id,
               "forward n" + std::to_string(node));
  const int next = next_channel_[node * topo_.node_count() + pkt.dst];
  if (next < 0) throw std::logic_error("no route at intermediate node");
  accept_packet(static_cast<size_t>(next), pkt);
}

void Engine::schedule_timer(SimTime at, uint32_t flow_id, uint64_t timer_id) {
  schedule({at, 0, EventKind::TimerExpiry, -1, {}, flow_id, timer_id});
}

void Engine::schedule_drl_step(SimTime at) {
  schedule({at, 0, EventKind::DrlStep, -1, {}, 0, 0});
}

void Engine::note_state_report(uint32_t flow_id) {
  if (tracing_) trace_.add(now_, EventKind::StateReportDue, flow_id, "report");
}

void Engine::process(const Event& ev) {
  switch (ev.kind) {
    case EventKind::PacketArrival:
      arrive(static_cast<size_t>(ev.channel), ev.packet);
      break;
    case EventKind::LinkFree: {
      Channel& c = channels_[static_cast<size_t>(ev.channel)];
      c.busy = false;
      if (tracing_)
        trace_.add(now_, EventKind::LinkFree, 0, "ch" + std::to_string(ev.channel));
      if (!c.queue.empty()) start_service(static_cast<size_t>(ev.channel));
      break;
    }
    case EventKind::TimerExpiry:
    case EventKind::DrlStep:
      if (tracing_) trace_.add(now_, ev.kind, ev.flow_id, "");
      if (on_timer_) on_timer_(ev, now_);
      break;
    case EventKind::StateReportDue:
      break;  // trace-only marker, never queued
  }
}

void Engine::run_until(SimTime t_end) {
  if (t_end < now_) throw std::logic_error("run_until target is in the past");
  while (!queue_.empty() && queue_.top().fire_time <= t_end) {
    Event ev = queue_.top();
    queue_.pop();
    assert(ev.fire_time >= now_ && "causality violated");
    now_ = ev.fire_time;
    process(ev);
  }
  now_ = t_end;
}

void Engine::set_link_bandwidth(size_t link_index, double bps) {
  if (bps <= 0) throw std::invalid_argument("bandwidth must be positive");
  channels_[2 * link_index].bandwidth_bps = bps;
  channels_[2 * link_index + 1].bandwidth_bps = bps;
}

void Engine::set_bottleneck_bandwidth(double bps) {
  for (size_t i : topo_.bottleneck_links()) set_link_bandwidth(i, bps);
}

const FlowCounters& Engine::flow_counters(uint32_t flow_id) {
  return flows_[flow_id];
}

bool Engine::conservation_ok() {
  std::unordered_map<uint32_t, uint64_t> inside;
  for (const auto& c : channels_) {
    // Walk the queue without draining it.
    DropTailQueue copy = c.queue;
    while (!copy.empty()) inside[copy.pop().flow_id]++;
  }
  // A packet between serialization start and arrival exists only as its
  // scheduled PacketArrival event; count those too.
  auto queue_copy = queue_;
  while (!queue_copy.empty()) {
    const Event& ev = queue_copy.top();
    if (ev.kind == EventKind::PacketArrival) inside[ev.packet.flow_id]++;
    queue_copy.pop();
  }
  for (const auto& [flow, counters] : flows_) {
    const uint64_t in_network =
        counters.packets_sent - counters.packets_delivered - counters.packets_dropped;
    if (inside[flow] != in_network) return false;
  }
  return true;
}

}  // namespace ascrl::sim
