#include "ascrl/sim/topology.hpp"

#include <algorithm>
#include <queue>

namespace ascrl::sim {

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw InvalidTopologyParams(what);
}

void check_link(const LinkSpec& s, const std::string& name) {
  check(s.bandwidth_bps > 0, name + ": bandwidth must be positive");
  check(s.queue_capacity >= 1, name + ": queue capacity must be >= 1");
}

Topology build_dumbbell(const TopologyParams& p) {
  check(p.pairs >= 1, "dumbbell: pairs must be >= 1");
  Topology t;
  t.kind = TopologyKind::Dumbbell;
  const int n = p.pairs;
  // Nodes: senders [0, n), left switch n, right switch n+1, receivers
  // [n+2, 2n+2).
  t.nodes.assign(n, NodeKind::Host);
  t.nodes.push_back(NodeKind::Switch);
  t.nodes.push_back(NodeKind::Switch);
  t.nodes.insert(t.nodes.end(), n, NodeKind::Host);
  const NodeId left = n, right = n + 1;
  for (int i = 0; i < n; ++i) t.links.push_back({i, left, p.edge, false});
  t.links.push_back({left, right, p.bottleneck, true});
  for (int i = 0; i < n; ++i) t.links.push_back({right, n + 2 + i, p.edge, false});
  return t;
}

Topology build_leaf_spine(const TopologyParams& p) {
  check(p.leaves >= 1 && p.spines >= 1 && p.hosts_per_leaf >= 1,
        "leaf-spine: counts must be >= 1");
  Topology t;
  t.kind = TopologyKind::LeafSpine;
  // Nodes: spines [0, S), leaves [S, S+L), then hosts grouped by leaf.
  const int S = p.spines, L = p.leaves, H = p.hosts_per_leaf;
  t.nodes.assign(S + L, NodeKind::Switch);
  t.nodes.insert(t.nodes.end(), L * H, NodeKind::Host);
  for (int l = 0; l < L; ++l)
    for (int s = 0; s < S; ++s)
      t.links.push_back({S + l, s, p.bottleneck, true});
  for (int l = 0; l < L; ++l)
    for (int h = 0; h < H; ++h)
      t.links.push_back({S + L + l * H + h, S + l, p.edge, false});
  return t;
}

Topology build_fat_tree(const TopologyParams& p) {
  const int k = p.fat_tree_k;
  check(k >= 2 && k % 2 == 0, "fat-tree: k must be even and >= 2");
  Topology t;
  t.kind = TopologyKind::FatTree;
  const int half = k / 2;
  const int cores = half * half;
  const int aggs = k * half;
  const int edges = k * half;
  const int hosts = k * half * half;
  // Nodes: cores, then per-pod aggregation, per-pod edge, then hosts.
  t.nodes.assign(cores + aggs + edges, NodeKind::Switch);
  t.nodes.insert(t.nodes.end(), hosts, NodeKind::Host);
  auto agg_id = [&](int pod, int i) { return cores + pod * half + i; };
  auto edge_id = [&](int pod, int i) { return cores + aggs + pod * half + i; };
  auto host_id = [&](int pod, int e, int h) {
    return cores + aggs + edges + pod * half * half + e * half + h;
  };
  // Core <-> aggregation: agg switch i of every pod connects to cores
  // [i*half, (i+1)*half). These top-tier links are the 2 Mbps tier.
  for (int pod = 0; pod < k; ++pod)
    for (int i = 0; i < half; ++i)
      for (int j = 0; j < half; ++j)
        t.links.push_back({agg_id(pod, i), i * half + j, p.bottleneck, true});
  for (int pod = 0; pod < k; ++pod)
    for (int i = 0; i < half; ++i)
      for (int e = 0; e < half; ++e)
        t.links.push_back({agg_id(pod, i), edge_id(pod, e), p.edge, false});
  for (int pod = 0; pod < k; ++pod)
    for (int e = 0; e < half; ++e)
      for (int h = 0; h < half; ++h)
        t.links.push_back({edge_id(pod, e), host_id(pod, e, h), p.edge, false});
  return t;
}

}  // namespace

bool Topology::connected() const {
  if (nodes.empty()) return false;
  std::vector<std::vector<NodeId>> adj(nodes.size());
  for (const auto& l : links) {
    adj[l.a].push_back(l.b);
    adj[l.b].push_back(l.a);
  }
  std::vector<bool> seen(nodes.size(), false);
  std::queue<NodeId> q;
  q.push(0);
  seen[0] = true;
  size_t visited = 1;
  while (!q.empty()) {
    NodeId n = q.front();
    q.pop();
    for (NodeId m : adj[n])
      if (!seen[m]) {
        seen[m] = true;
        ++visited;
        q.push(m);
      }
  }
  return visited == nodes.size();
}

Topology build_topology(const TopologyParams& params) {
  check_link(params.bottleneck, "bottleneck");
  check_link(params.edge, "edge");
  Topology t;
  switch (params.kind) {
    case TopologyKind::Dumbbell:
      t = build_dumbbell(params);
      break;
    case TopologyKind::LeafSpine:
      t = build_leaf_spine(params);
      break;
    case TopologyKind::FatTree:
      t = build_fat_tree(params);
      break;
    case TopologyKind::Custom:
      throw InvalidTopologyParams("custom topologies are assembled directly");
  }
  for (const auto& l : t.links) {
    check(l.a >= 0 && l.b >= 0 && l.a < static_cast<NodeId>(t.nodes.size()) &&
              l.b < static_cast<NodeId>(t.nodes.size()),
          "link endpoint out of range");
  }
  check(t.connected(), "topology must be connected");
  return t;
}

std::vector<std::pair<NodeId, NodeId>> default_flow_pairs(const Topology& topo,
                                                          int n_flows) {
  if (n_flows < 1) throw InvalidTopologyParams("need at least one flow");
  std::vector<std::pair<NodeId, NodeId>> out;
  const auto hosts = topo.hosts();
  if (topo.kind == TopologyKind::Dumbbell) {
    const int n = static_cast<int>(hosts.size()) / 2;
    check(n_flows <= n, "dumbbell: more flows than sender hosts");
    for (int i = 0; i < n_flows; ++i) out.emplace_back(hosts[i], hosts[n + i]);
    return out;
  }
  // Leaf-spine / fat-tree: pair each source with the host one "group" over so
  // every flow crosses the switching fabric. Group = leaf or pod.
  check(hosts.size() >= 2, "need at least two hosts");
  const size_t half = hosts.size() / 2;
  check(n_flows <= static_cast<int>(half), "more flows than cross-fabric pairs");
  for (int i = 0; i < n_flows; ++i)
    out.emplace_back(hosts[i], hosts[(i + half) % hosts.size()]);
  return out;
}

}  // namespace ascrl::sim
