#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ddpp/errors.hpp"
#include "ddpp/network.hpp"
#include "ddpp/spectrum.hpp"

namespace ddpp {

struct SearchOptions {
  Relation mode = Relation::prime;
  // Per-route cost limit; only exact together with Relation::base.
  std::optional<Cost> max_route_cost;
  CostModel cost_model;
  // Keep settling labels after the first one reaches (dst, dst).
  bool enumerate_all = false;
  // Called for every settled label, in pop order.
  std::function<void(const Label&)> on_settle;
};

inline void validate(const SearchOptions& opts) {
  if (opts.max_route_cost && opts.mode != Relation::base) {
    throw InputError("a route cost limit requires the base relation");
  }
  if (opts.max_route_cost && *opts.max_route_cost < 0) {
    throw InputError("route cost limit must be non-negative");
  }
}

struct SearchStats {
  std::uint64_t labels_generated = 0;
  std::uint64_t labels_dominated = 0;
  std::uint64_t labels_settled = 0;
  std::uint64_t queue_pops = 0;
  std::uint64_t max_labels_per_vertex = 0;
  // Efficient labels left at (dst, dst) when the search stops.
  std::uint64_t labels_at_destination = 0;
  std::chrono::nanoseconds wall_time{0};
};

struct Route {
  std::vector<std::string> nodes;
  std::vector<LinkId> links;
  UnitInterval slots;
  Cost cost = 0;

  friend bool operator==(const Route&, const Route&) = default;
};

enum class Status : std::uint8_t { routed, blocked };

struct Solution {
  Status status = Status::blocked;
  Cost total_cost = 0;
  Route working;
  Route protecting;
  SearchStats stats;
};

// Arena of every label created by one search. Labels refer to their parent
// by index; dominated labels are flagged dead instead of erased.
struct LabelPool {
  std::vector<Label> labels;
  std::vector<bool> dead;

  std::size_t add(Label l) {
    labels.push_back(std::move(l));
    dead.push_back(false);
    return labels.size() - 1;
  }
  const Label& operator[](std::size_t i) const { return labels[i]; }
  std::size_t size() const noexcept { return labels.size(); }
};

// Undominated labels of one vertex, as pool indices.
struct EfficientSet {
  std::vector<std::size_t> members;

  std::size_t size() const noexcept { return members.size(); }
};

struct Insertion {
  bool accepted = false;
  std::size_t index = 0;
  std::size_t removed = 0;
};

// Rejects `cand` if a member dominates it (an equivalent incumbent wins).
// Otherwise adds it to the pool and the set, and drops and flags dead the
// members it dominates.
inline Insertion insert_if_efficient(EfficientSet& set, LabelPool& pool,
                                     Label cand, Relation mode) {
  for (auto m : set.members) {
    if (dominates(mode, pool[m], cand)) return {};
  }
  Insertion r{true, 0, 0};
  std::erase_if(set.members, [&](std::size_t m) {
    if (dominates(mode, cand, pool[m])) {
      pool.dead[m] = true;
      ++r.removed;
      return true;
    }
    return false;
  });
  r.index = pool.add(std::move(cand));
  set.members.push_back(r.index);
  return r;
}

// Candidate labels of settled label `index`: every unused link at either
// route end, except ends already at `dst`. A same-node label whose traits are
// identical is expanded on slot a only, since slot b yields the same labels.
inline std::vector<Label> expand(const LabelPool& pool, std::size_t index,
                                 const Network& net, Unit demand,
                                 NodeIndex dst, const SearchOptions& opts) {
  const auto& l = pool[index];
  std::vector<Label> out;
  const bool mirrored = l.vertex.same_node() && l.ta == l.tb;
  for (auto side : {Side::a, Side::b}) {
    if (side == Side::b && mirrored) break;
    const auto node = side == Side::a ? l.vertex.a : l.vertex.b;
    if (node == dst) continue;
    for (auto id : net.adjacent(node)) {
      if (l.used.contains(id)) continue;
      for (auto& c : label_extend(l, net.link(id), side, demand,
                                  opts.cost_model, index)) {
        if (opts.max_route_cost && (c.ta.cost > *opts.max_route_cost ||
                                    c.tb.cost > *opts.max_route_cost)) {
          continue;
        }
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

// Splits the parent chain of a (dst, dst) label into its two routes and
// assigns each the lowest `demand` units of its final trait.
inline std::pair<Route, Route> reconstruct(const LabelPool& pool,
                                           std::size_t index,
                                           const Network& net, NodeIndex src,
                                           Unit demand) {
  const auto& last = pool[index];
  std::vector<LinkId> links[2];
  for (std::optional<std::size_t> i = index; i; i = pool[*i].parent) {
    const auto& l = pool[*i];
    if (!l.appended_link) {
      if (l.parent) throw ContractError("label chain: link missing");
      break;
    }
    if (!l.parent) throw ContractError("label chain: parent missing");
    links[l.extended_route].push_back(*l.appended_link);
  }
  Route routes[2];
  for (int r = 0; r < 2; ++r) {
    if (links[r].empty()) throw ContractError("label chain: empty route");
    std::reverse(links[r].begin(), links[r].end());
    const auto& t = last.route_in_a == r ? last.ta : last.tb;
    auto& route = routes[r];
    route.links = links[r];
    route.cost = t.cost;
    route.slots = {t.ri.lo, t.ri.lo + demand};
    auto at = src;
    route.nodes.push_back(net.name(at));
    for (auto id : route.links) {
      const auto& link = net.link(id);
      if (!link.touches(at)) throw ContractError("label chain: broken trail");
      at = link.other(at);
      route.nodes.push_back(net.name(at));
    }
  }
  if (routes[1].cost < routes[0].cost ||
      (routes[1].cost == routes[0].cost && routes[1].links < routes[0].links)) {
    std::swap(routes[0], routes[1]);
  }
  return {std::move(routes[0]), std::move(routes[1])};
}

// Generic Dijkstra over node-pair vertices, from (src, src) to (dst, dst).
inline Solution solve(const Network& net, const Demand& demand,
                      const SearchOptions& opts = {}) {
  validate(net, demand);
  validate(opts);
  const auto t0 = std::chrono::steady_clock::now();
  const auto src = net.index_of(demand.src);
  const auto dst = net.index_of(demand.dst);
  const auto n = net.node_count();
  auto key = [n](const Vertex& v) {
    return static_cast<std::uint64_t>(v.a) * n + v.b;
  };

  using Entry = std::tuple<Cost, std::uint64_t, Unit, Unit, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  LabelPool pool;
  std::vector<EfficientSet> sets(n * n);
  Solution sol;
  auto& stats = sol.stats;

  auto push = [&](std::size_t i) {
    const auto& l = pool[i];
    queue.emplace(label_cost(l), key(l.vertex), l.ta.ri.lo, l.tb.ri.lo, i);
  };

  auto root = root_label(net, src);
  const auto root_key = key(root.vertex);
  const auto ins = insert_if_efficient(sets[root_key], pool, std::move(root),
                                       opts.mode);
  ++stats.labels_generated;
  stats.max_labels_per_vertex = 1;
  push(ins.index);

  const auto target = key(Vertex::of(dst, dst));
  std::optional<std::size_t> found;
  while (!queue.empty()) {
    const auto index = std::get<4>(queue.top());
    queue.pop();
    ++stats.queue_pops;
    if (pool.dead[index]) continue;
    ++stats.labels_settled;
    if (opts.on_settle) opts.on_settle(pool[index]);
    if (key(pool[index].vertex) == target) {
      if (!found) found = index;
      if (!opts.enumerate_all) break;
      continue;
    }
    for (auto& c : expand(pool, index, net, demand.units, dst, opts)) {
      ++stats.labels_generated;
      auto& set = sets[key(c.vertex)];
      const auto r = insert_if_efficient(set, pool, std::move(c), opts.mode);
      if (!r.accepted) {
        ++stats.labels_dominated;
        continue;
      }
      stats.labels_dominated += r.removed;
      stats.max_labels_per_vertex =
          std::max<std::uint64_t>(stats.max_labels_per_vertex, set.size());
      push(r.index);
    }
  }

  stats.labels_at_destination = sets[target].size();
  if (found) {
    auto [working, protecting] =
        reconstruct(pool, *found, net, src, demand.units);
    sol.status = Status::routed;
    sol.total_cost = working.cost + protecting.cost;
    sol.working = std::move(working);
    sol.protecting = std::move(protecting);
  }
  stats.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - t0);
  return sol;
}

}  // namespace ddpp
