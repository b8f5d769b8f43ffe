#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace iconasim::topo {

/// Dense node identifier, 0..N-1 within a topology.
using NodeId = int;

/// Index of a link inside Topology::links. Bidirectional links are stored
/// once and traversable both ways.
using LinkId = int;

enum class LinkStatus { Up, Down };

struct Link {
  NodeId a = -1;
  NodeId b = -1;
  double delay_ms = 0.0;       // one-way
  double capacity_gbps = 0.0;
  LinkStatus status = LinkStatus::Up;
  int flow_count = 0;          // installed pseudo-wires crossing this link
  double reserved_gbps = 0.0;  // bandwidth claimed by installed services

  NodeId other(NodeId n) const { return n == a ? b : a; }
  bool touches(NodeId n) const { return n == a || n == b; }
  double available_gbps() const { return capacity_gbps - reserved_gbps; }
};

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weighted bidirectional graph of switches and links. No parallel links,
/// no self loops, link delays strictly positive.
class Topology {
 public:
  Topology() = default;

  NodeId add_node(std::string name = {});
  LinkId add_link(NodeId a, NodeId b, double delay_ms, double capacity_gbps);

  int node_count() const { return static_cast<int>(names_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }

  const Link& link(LinkId id) const { return links_[id]; }
  Link& link(LinkId id) { return links_[id]; }
  const std::vector<Link>& links() const { return links_; }

  const std::string& node_name(NodeId n) const { return names_[n]; }
  bool has_node(NodeId n) const { return n >= 0 && n < node_count(); }

  /// Incident link ids, sorted by (neighbor id, link id).
  const std::vector<LinkId>& incident(NodeId n) const { return adjacency_[n]; }

  /// -1 when no link joins the pair.
  LinkId find_link(NodeId a, NodeId b) const;

  /// True when every node is reachable from node 0 over Up links.
  bool connected() const;

  /// Grid generators record their dimensions so partitioners can cut
  /// rectangular regions.
  std::optional<std::pair<int, int>> grid_dims() const { return grid_dims_; }
  void set_grid_dims(int rows, int cols) { grid_dims_ = {rows, cols}; }

 private:
  std::vector<std::string> names_;
  std::vector<Link> links_;
  std::vector<std::vector<LinkId>> adjacency_;
  std::optional<std::pair<int, int>> grid_dims_;
};

/// rows x cols grid, every link with the given one-way delay.
/// Node id of cell (r, c) is r*cols + c.
Topology build_grid(int rows, int cols, double link_delay_ms,
                    double capacity_gbps = 10.0);

/// Line-oriented topology file:
///   node <id> [name]
///   link <a> <b> <delay_ms> <capacity_gbps>
/// '#' starts a comment. Errors name the offending line.
Topology load_topology(const std::string& path);
Topology parse_topology(const std::string& text, const std::string& origin);

struct EndPoint {
  int id = -1;
  NodeId node = -1;
};

}  // namespace iconasim::topo
