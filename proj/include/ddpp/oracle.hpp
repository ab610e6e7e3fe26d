#pragma once

// Brute-force reference for the protected routing problem. Deliberately
// independent of the label relations and of the search.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ddpp/cost_model.hpp"
#include "ddpp/errors.hpp"
#include "ddpp/interval.hpp"
#include "ddpp/link_set.hpp"
#include "ddpp/network.hpp"

namespace ddpp {

inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000;

// Maximal blocks of units free on every link of `route` and at least
// `demand` long.
inline IntervalList route_intervals(const Network& net,
                                    std::span<const LinkId> route,
                                    Unit demand) {
  for (std::size_t i = 0; i < route.size(); ++i) {
    if (route[i] >= net.link_count()) {
      throw InputError("route names unknown link " + std::to_string(route[i]));
    }
    if (std::find(route.begin(), route.begin() + i, route[i]) !=
        route.begin() + i) {
      throw InputError("route repeats link " + std::to_string(route[i]));
    }
    if (i > 0) {
      const auto& p = net.link(route[i - 1]);
      const auto& q = net.link(route[i]);
      if (!q.touches(p.ends.first) && !q.touches(p.ends.second)) {
        throw InputError("route is disconnected at link " +
                         std::to_string(route[i]));
      }
    }
  }
  IntervalList free{{0, net.units()}};
  for (auto id : route) free = intersect(free, net.link(id).available);
  std::erase_if(free, [&](const UnitInterval& iv) { return iv.length() < demand; });
  return free;
}

struct OracleRoute {
  std::vector<LinkId> links;
  Cost length = 0;
  Cost cost = 0;
  IntervalList intervals;
  LinkSet mask;
};

struct RoutePair {
  std::vector<LinkId> route_a;
  std::vector<LinkId> route_b;
  Cost cost_a = 0;
  Cost cost_b = 0;
  IntervalList intervals_a;
  IntervalList intervals_b;
};

struct OracleResult {
  bool routed = false;
  Cost min_cost = 0;
  RoutePair witness;
  std::uint64_t pair_count = 0;
  std::uint64_t route_count = 0;
};

// Every trail from src that ends on its first arrival at dst and keeps at
// least one block of `demand` free units.
inline std::vector<OracleRoute> enumerate_routes(const Network& net,
                                                 NodeIndex src, NodeIndex dst,
                                                 Unit demand,
                                                 const CostModel& model,
                                                 std::uint64_t budget) {
  std::vector<OracleRoute> out;
  std::vector<LinkId> trail;
  std::vector<bool> used(net.link_count(), false);

  auto dfs = [&](auto&& self, NodeIndex at, Cost length,
                 const IntervalList& free) -> void {
    if (at == dst) {
      OracleRoute r;
      r.links = trail;
      r.length = length;
      r.cost = model.route_cost(length);
      r.intervals = free;
      r.mask = LinkSet(net.link_count());
      for (auto id : trail) r.mask.insert(id);
      out.push_back(std::move(r));
      if (out.size() > budget) {
        throw BudgetExceeded("oracle route budget exceeded");
      }
      return;
    }
    for (auto id : net.adjacent(at)) {
      if (used[id]) continue;
      const auto& link = net.link(id);
      auto next = intersect(free, link.available, demand);
      if (next.empty()) continue;
      used[id] = true;
      trail.push_back(id);
      self(self, link.other(at), length + link.cost, next);
      trail.pop_back();
      used[id] = false;
    }
  };
  dfs(dfs, src, 0, IntervalList{{0, net.units()}});
  return out;
}

// Exhaustive minimum over unordered pairs of link-disjoint feasible trails.
// `budget` caps the number of candidate pairs examined.
// Ties go to the lexicographically smallest (route_a, route_b), route_a
// being the lexicographically smaller of the two.
inline OracleResult oracle_solve(const Network& net, const Demand& demand,
                                 std::optional<Cost> max_route_cost = {},
                                 const CostModel& model = {},
                                 std::uint64_t budget = kDefaultOracleBudget) {
  validate(net, demand);
  const auto src = net.index_of(demand.src);
  const auto dst = net.index_of(demand.dst);
  auto routes = enumerate_routes(net, src, dst, demand.units, model, budget);
  if (max_route_cost) {
    std::erase_if(routes, [&](const OracleRoute& r) { return r.cost > *max_route_cost; });
  }
  std::sort(routes.begin(), routes.end(),
            [](const OracleRoute& x, const OracleRoute& y) { return x.links < y.links; });

  OracleResult res;
  res.route_count = routes.size();
  const auto candidates = routes.size() * (routes.size() - (routes.empty() ? 0 : 1)) / 2;
  if (candidates > budget) {
    throw BudgetExceeded("oracle pair budget of " + std::to_string(budget) + " exceeded by " +
                         std::to_string(candidates) + " candidate pairs");
  }
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = 0; i < routes.size(); ++i) {
    for (std::size_t j = i + 1; j < routes.size(); ++j) {
      if (!routes[i].mask.disjoint(routes[j].mask)) continue;
      ++res.pair_count;
      const auto cost = routes[i].cost + routes[j].cost;
      if (!best || cost < res.min_cost) {
        best = {i, j};
        res.min_cost = cost;
      }
    }
  }
  if (best) {
    const auto& a = routes[best->first];
    const auto& b = routes[best->second];
    res.routed = true;
    res.witness = {a.links, b.links, a.cost, b.cost, a.intervals, b.intervals};
  }
  return res;
}

}  // namespace ddpp
