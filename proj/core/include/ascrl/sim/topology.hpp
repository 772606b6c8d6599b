#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ascrl/sim/link.hpp"

namespace ascrl::sim {

using NodeId = int;

enum class NodeKind : uint8_t { Host, Switch };
enum class TopologyKind : uint8_t { Dumbbell, LeafSpine, FatTree, Custom };

struct Link {
  NodeId a = -1;
  NodeId b = -1;
  LinkSpec spec;
  bool bottleneck = false;
};

struct InvalidTopologyParams : std::invalid_argument {
  explicit InvalidTopologyParams(const std::string& what)
      : std::invalid_argument(what) {}
};

// Validated node/link graph. Hosts attach flows; switches only forward.
struct Topology {
  TopologyKind kind = TopologyKind::Custom;
  std::vector<NodeKind> nodes;
  std::vector<Link> links;

  size_t node_count() const { return nodes.size(); }
  size_t link_count() const { return links.size(); }
  bool is_host(NodeId n) const { return nodes.at(n) == NodeKind::Host; }

  std::vector<NodeId> hosts() const {
    std::vector<NodeId> out;
    for (NodeId n = 0; n < static_cast<NodeId>(nodes.size()); ++n)
      if (nodes[n] == NodeKind::Host) out.push_back(n);
    return out;
  }

  std::vector<size_t> bottleneck_links() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < links.size(); ++i)
      if (links[i].bottleneck) out.push_back(i);
    return out;
  }

  bool connected() const;
};

struct TopologyParams {
  TopologyKind kind = TopologyKind::Dumbbell;
  // Dumbbell: sender/receiver pair count. LeafSpine: leaves, spines,
  // hosts_per_leaf. FatTree: even k.
  int pairs = 3;
  int leaves = 2;
  int spines = 2;
  int hosts_per_leaf = 2;
  int fat_tree_k = 2;
  LinkSpec bottleneck{2e6, SimTime::from_ms(20), 16};
  LinkSpec edge{10e6, SimTime::from_ms(5), 16};
};

// Builds one of the canned topologies. Bottleneck links are flagged so the
// harness can retarget them for bandwidth schedules.
Topology build_topology(const TopologyParams& params);

// Deterministic cross-bottleneck (src, dst) host pairs for n flows.
std::vector<std::pair<NodeId, NodeId>> default_flow_pairs(const Topology& topo,
                                                          int n_flows);

}  // namespace ascrl::sim
