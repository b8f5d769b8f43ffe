#include "topo/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace iconasim::topo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Equality under accumulation noise; genuine cost differences in this domain
// are >= 1e-4 while float noise stays below 1e-9 relative.
bool close(double a, double b) {
  double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
  return std::fabs(a - b) <= 1e-9 * scale;
}

std::vector<double> dijkstra(const Topology& t, NodeId from,
                             const LinkCostFn& cost,
                             const std::vector<char>& banned) {
  std::vector<double> dist(t.node_count(), kInf);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[from] = 0.0;
  pq.push({0.0, from});
  while (!pq.empty()) {
    auto [d, n] = pq.top();
    pq.pop();
    if (d > dist[n]) continue;
    for (LinkId l : t.incident(n)) {
      if (banned[l]) continue;
      const Link& lk = t.link(l);
      double nd = d + cost(lk);
      NodeId m = lk.other(n);
      if (nd < dist[m] && !close(nd, dist[m])) {
        dist[m] = nd;
        pq.push({nd, m});
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<NodeId> Path::nodes(const Topology& t) const {
  std::vector<NodeId> seq{src};
  NodeId at = src;
  for (LinkId l : links) {
    at = t.link(l).other(at);
    seq.push_back(at);
  }
  return seq;
}

bool Path::shares_link_with(const Path& other) const {
  for (LinkId l : links)
    if (std::find(other.links.begin(), other.links.end(), l) != other.links.end())
      return true;
  return false;
}

double composite_link_cost(const Link& l, const CompositeWeights& w) {
  double avail = std::max(l.available_gbps(), 1e-9);
  return w.w_delay * l.delay_ms + w.w_inv_bandwidth / avail +
         w.w_flows * l.flow_count;
}

std::optional<Path> min_cost_path(const Topology& t, NodeId src, NodeId dst,
                                  const LinkCostFn& cost,
                                  const std::vector<LinkId>& excluded) {
  if (!t.has_node(src) || !t.has_node(dst)) return std::nullopt;
  std::vector<char> banned(t.link_count(), 0);
  for (LinkId l : excluded) banned[l] = 1;
  for (LinkId l = 0; l < t.link_count(); ++l)
    if (t.link(l).status != LinkStatus::Up) banned[l] = 1;

  if (src == dst) return Path{src, dst, {}, 0.0};

  auto dist_s = dijkstra(t, src, cost, banned);
  if (dist_s[dst] == kInf) return std::nullopt;
  auto dist_d = dijkstra(t, dst, cost, banned);
  double total = dist_s[dst];

  // Walk forward along tight links, always taking the smallest-id next node:
  // this realizes the lexicographically smallest minimum-cost node sequence.
  // Positive link costs keep the walk loop-free.
  Path p;
  p.src = src;
  p.dst = dst;
  NodeId at = src;
  while (at != dst) {
    NodeId best_node = -1;
    LinkId best_link = -1;
    for (LinkId l : t.incident(at)) {
      if (banned[l]) continue;
      const Link& lk = t.link(l);
      NodeId m = lk.other(at);
      if (!close(dist_s[at] + cost(lk) + dist_d[m], total)) continue;
      if (!close(dist_s[at] + cost(lk), dist_s[m])) continue;
      if (best_node == -1 || m < best_node) {
        best_node = m;
        best_link = l;
      }
    }
    if (best_link == -1) return std::nullopt;  // numeric corner, not expected
    p.links.push_back(best_link);
    p.delay_ms += t.link(best_link).delay_ms;
    at = best_node;
  }
  return p;
}

std::optional<Path> shortest_path(const Topology& t, NodeId src, NodeId dst,
                                  const std::vector<LinkId>& excluded) {
  return min_cost_path(
      t, src, dst, [](const Link& l) { return l.delay_ms; }, excluded);
}

std::optional<Path> disjoint_backup_path(const Topology& t, const Path& primary,
                                         const CompositeWeights& w) {
  return min_cost_path(
      t, primary.src, primary.dst,
      [&](const Link& l) { return composite_link_cost(l, w); }, primary.links);
}

Path make_path(const Topology& t, NodeId src, const std::vector<LinkId>& links) {
  Path p;
  p.src = src;
  p.links = links;
  NodeId at = src;
  for (LinkId l : links) {
    p.delay_ms += t.link(l).delay_ms;
    at = t.link(l).other(at);
  }
  p.dst = at;
  return p;
}

}  // namespace iconasim::topo
