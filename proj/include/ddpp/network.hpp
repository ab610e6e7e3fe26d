#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ddpp/errors.hpp"
#include "ddpp/interval.hpp"
#include "ddpp/link_set.hpp"

namespace ddpp {

using Cost = std::int64_t;
using NodeIndex = std::uint32_t;

struct Link {
  LinkId id = 0;
  std::pair<NodeIndex, NodeIndex> ends;
  Cost cost = 0;
  IntervalList available;

  NodeIndex other(NodeIndex n) const noexcept {
    return ends.first == n ? ends.second : ends.first;
  }
  bool touches(NodeIndex n) const noexcept {
    return ends.first == n || ends.second == n;
  }

  friend bool operator==(const Link&, const Link&) = default;
};

struct Demand {
  std::string src;
  std::string dst;
  Unit units = 1;

  friend bool operator==(const Demand&, const Demand&) = default;
};

// Undirected network with per-link cost and available units out of
// [0, units). Parallel links are allowed; links are told apart by id.
class Network {
 public:
  Network() = default;

  // Validates and normalizes. `links[i].id` must equal i.
  Network(Unit units, std::vector<std::string> nodes, std::vector<Link> links)
      : units_(units), nodes_(std::move(nodes)), links_(std::move(links)) {
    if (units_ <= 0) throw InputError("unit count must be positive");
    for (NodeIndex i = 0; i < nodes_.size(); ++i) {
      if (!index_.emplace(nodes_[i], i).second) {
        throw InputError("duplicate node id '" + nodes_[i] + "'");
      }
    }
    adjacency_.assign(nodes_.size(), {});
    for (std::size_t i = 0; i < links_.size(); ++i) {
      auto& link = links_[i];
      const auto where = "link " + std::to_string(link.id);
      if (link.id != i) {
        throw InputError(where + ": link ids must be dense 0..L-1 and unique");
      }
      if (link.ends.first >= nodes_.size() ||
          link.ends.second >= nodes_.size()) {
        throw InputError(where + ": endpoint names no existing node");
      }
      if (link.ends.first == link.ends.second) {
        throw InputError(where + ": self-loop");
      }
      if (link.cost < 0) throw InputError(where + ": negative cost");
      for (const auto& iv : link.available) {
        if (iv.lo < 0 || iv.hi > units_ || iv.lo > iv.hi) {
          throw InputError(where + ": interval [" + std::to_string(iv.lo) +
                           "," + std::to_string(iv.hi) +
                           ") exceeds unit count " + std::to_string(units_));
        }
      }
      link.available = normalize(std::move(link.available));
      adjacency_[link.ends.first].push_back(link.id);
      adjacency_[link.ends.second].push_back(link.id);
    }
  }

  Unit units() const noexcept { return units_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t link_count() const noexcept { return links_.size(); }

  std::span<const std::string> nodes() const noexcept { return nodes_; }
  std::span<const Link> links() const noexcept { return links_; }
  const Link& link(LinkId id) const { return links_.at(id); }
  const std::string& name(NodeIndex n) const { return nodes_.at(n); }

  // Link ids incident to `n`, ascending.
  std::span<const LinkId> adjacent(NodeIndex n) const { return adjacency_.at(n); }

  NodeIndex index_of(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw InputError("unknown node '" + name + "'");
    return it->second;
  }

  bool has_node(const std::string& name) const { return index_.contains(name); }

  // Replaces the availability of one link; used by the traffic simulator on
  // its private copy.
  void set_available(LinkId id, IntervalList available) {
    auto& link = links_.at(id);
    for (const auto& iv : available) {
      if (iv.lo < 0 || iv.hi > units_ || iv.lo > iv.hi) {
        throw InputError("interval exceeds unit count");
      }
    }
    link.available = normalize(std::move(available));
  }

  friend bool operator==(const Network& a, const Network& b) {
    return a.units_ == b.units_ && a.nodes_ == b.nodes_ && a.links_ == b.links_;
  }

 private:
  Unit units_ = 0;
  std::vector<std::string> nodes_;
  std::vector<Link> links_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<std::vector<LinkId>> adjacency_;
};

inline std::vector<Link> incident_links(const Network& net,
                                        const std::string& node) {
  std::vector<Link> out;
  for (auto id : net.adjacent(net.index_of(node))) out.push_back(net.link(id));
  return out;
}

inline void validate(const Network& net, const Demand& demand) {
  net.index_of(demand.src);
  net.index_of(demand.dst);
  if (demand.src == demand.dst) {
    throw InputError("demand source and destination coincide");
  }
  if (demand.units < 1 || demand.units > net.units()) {
    throw InputError("demand units must lie in [1, " +
                     std::to_string(net.units()) + "]");
  }
}

// Chain n_s, n_1..n_m, n_x of m+1 segments. Segment i holds an upper link of
// cost 0 (id 2i) and a lower link of cost 2^i (id 2i+1); all units free.
inline Network lobe_network(int m, Unit units) {
  if (m < 1 || m > 61) throw InputError("lobe size m must lie in [1, 61]");
  if (units < 1) throw InputError("unit count must be positive");
  std::vector<std::string> nodes{"n_s"};
  for (int i = 1; i <= m; ++i) nodes.push_back("n_" + std::to_string(i));
  nodes.emplace_back("n_x");
  std::vector<Link> links;
  for (int i = 0; i <= m; ++i) {
    const auto a = static_cast<NodeIndex>(i);
    const auto b = static_cast<NodeIndex>(i + 1);
    links.push_back({static_cast<LinkId>(links.size()), {a, b}, 0, {{0, units}}});
    links.push_back({static_cast<LinkId>(links.size()), {a, b}, Cost{1} << i,
                     {{0, units}}});
  }
  return Network(units, std::move(nodes), std::move(links));
}

struct RandomNetworkParams {
  std::size_t nodes = 8;
  double avg_degree = 3.0;
  Unit units = 8;
  double fill = 1.0;
  std::uint64_t seed = 0;
};

// Connected random instance: random spanning tree plus extra distinct node
// pairs up to round(n * avg_degree / 2) links. Costs uniform in [1, 100];
// every unit of every link free with probability `fill`.
inline Network random_network(const RandomNetworkParams& p) {
  if (p.nodes < 2) throw InputError("random network needs at least 2 nodes");
  if (p.units < 1) throw InputError("unit count must be positive");
  if (!(p.fill >= 0.0 && p.fill <= 1.0)) throw InputError("fill must lie in [0, 1]");
  if (!(p.avg_degree >= 0.0)) throw InputError("average degree must be non-negative");
  const auto n = p.nodes;
  const auto max_links = n * (n - 1) / 2;
  const auto target = std::max<std::size_t>(
      n - 1, static_cast<std::size_t>(std::llround(static_cast<double>(n) * p.avg_degree / 2.0)));
  if (target > max_links) {
    throw InputError("average degree " + std::to_string(p.avg_degree) +
                     " unsatisfiable with " + std::to_string(n) +
                     " nodes and no parallel links");
  }

  std::mt19937_64 rng(p.seed);
  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back("v" + std::to_string(i));

  std::vector<NodeIndex> order(n);
  std::iota(order.begin(), order.end(), NodeIndex{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  std::vector<std::vector<bool>> linked(n, std::vector<bool>(n, false));
  auto add_pair = [&](NodeIndex a, NodeIndex b) {
    if (a > b) std::swap(a, b);
    linked[a][b] = true;
    pairs.emplace_back(a, b);
  };
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    add_pair(order[i], order[pick(rng)]);
  }
  std::vector<std::pair<NodeIndex, NodeIndex>> spare;
  for (NodeIndex a = 0; a < n; ++a) {
    for (NodeIndex b = a + 1; b < n; ++b) {
      if (!linked[a][b]) spare.emplace_back(a, b);
    }
  }
  std::shuffle(spare.begin(), spare.end(), rng);
  for (std::size_t i = 0; pairs.size() < target; ++i) add_pair(spare[i].first, spare[i].second);

  std::uniform_int_distribution<Cost> cost(1, 100);
  std::bernoulli_distribution free(p.fill);
  std::vector<Link> links;
  for (const auto& [a, b] : pairs) {
    IntervalList avail;
    for (Unit u = 0; u < p.units; ++u) {
      if (free(rng)) avail.push_back({u, u + 1});
    }
    links.push_back({static_cast<LinkId>(links.size()), {a, b}, cost(rng),
                     normalize(std::move(avail))});
  }
  return Network(p.units, std::move(nodes), std::move(links));
}

// Breadth-first reachability from node 0.
inline bool is_connected(const Network& net) {
  if (net.node_count() == 0) return true;
  std::vector<bool> seen(net.node_count(), false);
  std::vector<NodeIndex> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto n = stack.back();
    stack.pop_back();
    for (auto id : net.adjacent(n)) {
      const auto m = net.link(id).other(n);
      if (!seen[m]) {
        seen[m] = true;
        stack.push_back(m);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

}  // namespace ddpp
