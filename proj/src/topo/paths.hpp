#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "topo/topology.hpp"

namespace iconasim::topo {

/// Simple path: consecutive links share a node, no repeated node.
struct Path {
  NodeId src = -1;
  NodeId dst = -1;
  std::vector<LinkId> links;
  double delay_ms = 0.0;

  bool empty() const { return links.empty(); }
  /// Node sequence src..dst, length links.size()+1 (or {src} when empty).
  std::vector<NodeId> nodes(const Topology& t) const;
  bool shares_link_with(const Path& other) const;
};

/// Per-link score used for backup-route selection:
///   w_delay * delay_ms + w_inv_bandwidth / available_gbps + w_flows * flows.
struct CompositeWeights {
  double w_delay = 1.0;          // per ms
  double w_inv_bandwidth = 1.0;  // per (1/Gbps)
  double w_flows = 0.01;         // per flow
};

double composite_link_cost(const Link& l, const CompositeWeights& w);

using LinkCostFn = std::function<double(const Link&)>;

/// Minimum-cost simple path over Up links, skipping `excluded`.
/// Ties between equal-cost paths resolve to the lexicographically smallest
/// node-id sequence. Returns nullopt when dst is unreachable.
std::optional<Path> min_cost_path(const Topology& t, NodeId src, NodeId dst,
                                  const LinkCostFn& cost,
                                  const std::vector<LinkId>& excluded = {});

/// Delay-metric shortest path (the service routing metric).
std::optional<Path> shortest_path(const Topology& t, NodeId src, NodeId dst,
                                  const std::vector<LinkId>& excluded = {});

/// Minimum-composite-score path between primary's endpoints sharing no link
/// with primary; nullopt when no link-disjoint alternative exists.
std::optional<Path> disjoint_backup_path(const Topology& t, const Path& primary,
                                         const CompositeWeights& w);

/// Path object for an explicit link sequence (delays summed from `t`).
Path make_path(const Topology& t, NodeId src, const std::vector<LinkId>& links);

}  // namespace iconasim::topo
