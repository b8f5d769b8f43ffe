#include "topo/topology.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace iconasim::topo {

NodeId Topology::add_node(std::string name) {
  NodeId id = node_count();
  if (name.empty()) name = fmt::format("n{}", id);
  names_.push_back(std::move(name));
  adjacency_.emplace_back();
  return id;
}

LinkId Topology::add_link(NodeId a, NodeId b, double delay_ms,
                          double capacity_gbps) {
  if (!has_node(a) || !has_node(b))
    throw TopologyError(fmt::format("link references unknown node {}-{}", a, b));
  if (a == b) throw TopologyError(fmt::format("self loop at node {}", a));
  if (delay_ms <= 0.0)
    throw TopologyError(fmt::format("nonpositive delay on link {}-{}", a, b));
  if (capacity_gbps <= 0.0)
    throw TopologyError(fmt::format("nonpositive capacity on link {}-{}", a, b));
  if (find_link(a, b) >= 0)
    throw TopologyError(fmt::format("parallel link {}-{}", a, b));
  LinkId id = link_count();
  links_.push_back(Link{std::min(a, b), std::max(a, b), delay_ms, capacity_gbps});
  auto insert_sorted = [&](NodeId at) {
    auto& inc = adjacency_[at];
    auto pos = std::find_if(inc.begin(), inc.end(), [&](LinkId l) {
      auto na = links_[l].other(at);
      auto nb = links_[id].other(at);
      return na > nb || (na == nb && l > id);
    });
    inc.insert(pos, id);
  };
  insert_sorted(a);
  insert_sorted(b);
  return id;
}

LinkId Topology::find_link(NodeId a, NodeId b) const {
  if (!has_node(a) || !has_node(b)) return -1;
  for (LinkId l : adjacency_[a])
    if (links_[l].other(a) == b) return l;
  return -1;
}

bool Topology::connected() const {
  if (node_count() == 0) return true;
  std::vector<char> seen(node_count(), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    for (LinkId l : adjacency_[n]) {
      if (links_[l].status != LinkStatus::Up) continue;
      NodeId m = links_[l].other(n);
      if (!seen[m]) {
        seen[m] = 1;
        ++visited;
        stack.push_back(m);
      }
    }
  }
  return visited == node_count();
}

Topology build_grid(int rows, int cols, double link_delay_ms,
                    double capacity_gbps) {
  if (rows < 2 || cols < 2)
    throw std::invalid_argument(
        fmt::format("grid dimensions must be >= 2, got {}x{}", rows, cols));
  if (link_delay_ms <= 0.0)
    throw std::invalid_argument("grid link delay must be positive");
  Topology t;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.add_node(fmt::format("g{}_{}", r, c));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      NodeId n = r * cols + c;
      if (c + 1 < cols) t.add_link(n, n + 1, link_delay_ms, capacity_gbps);
      if (r + 1 < rows) t.add_link(n, n + cols, link_delay_ms, capacity_gbps);
    }
  }
  t.set_grid_dims(rows, cols);
  return t;
}

Topology parse_topology(const std::string& text, const std::string& origin) {
  Topology t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw TopologyError(fmt::format("{}:{}: {}", origin, lineno, why));
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "node") {
      int id;
      if (!(ls >> id)) fail("malformed node record");
      std::string name;
      ls >> name;
      if (id != t.node_count())
        fail(fmt::format("node ids must be dense and ordered, expected {} got {}",
                         t.node_count(), id));
      t.add_node(name);
    } else if (kind == "link") {
      int a, b;
      double delay, cap;
      if (!(ls >> a >> b >> delay >> cap)) fail("malformed link record");
      if (!t.has_node(a) || !t.has_node(b)) fail("link references unknown node");
      if (delay <= 0.0) fail("link delay must be positive");
      if (cap <= 0.0) fail("link capacity must be positive");
      try {
        t.add_link(a, b, delay, cap);
      } catch (const TopologyError& e) {
        fail(e.what());
      }
    } else {
      fail(fmt::format("unknown record '{}'", kind));
    }
  }
  lineno = 0;
  if (t.node_count() == 0) fail("empty topology");
  if (!t.connected()) fail("topology is not connected");
  return t;
}

Topology load_topology(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw TopologyError(fmt::format("{}: cannot open", path));
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_topology(buf.str(), path);
}

}  // namespace iconasim::topo
