#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ddpp/errors.hpp"
#include "ddpp/network.hpp"
#include "ddpp/search.hpp"

namespace ddpp {

struct TrafficEvent {
  std::uint64_t id = 0;
  double time = 0.0;
  std::string src;
  std::string dst;
  Unit units = 1;
  double hold = 1.0;

  friend bool operator==(const TrafficEvent&, const TrafficEvent&) = default;
};

struct SimReport {
  std::uint64_t offered = 0;
  std::uint64_t routed = 0;
  std::uint64_t blocked = 0;
  double blocking_probability = 0.0;
  double mean_labels_generated = 0.0;
  std::uint64_t max_labels_generated = 0;
  std::uint64_t max_labels_per_vertex = 0;
  double mean_wall_time_s = 0.0;

  // Timing is excluded: two replays of one traffic file compare equal.
  friend bool operator==(const SimReport& a, const SimReport& b) {
    return std::tie(a.offered, a.routed, a.blocked, a.blocking_probability,
                    a.mean_labels_generated, a.max_labels_generated,
                    a.max_labels_per_vertex) ==
           std::tie(b.offered, b.routed, b.blocked, b.blocking_probability,
                    b.mean_labels_generated, b.max_labels_generated,
                    b.max_labels_per_vertex);
  }
};

// Mutable spectrum state of one simulation. Owns a private copy of the
// network and records which connection holds every occupied unit.
class Simulator {
 public:
  Simulator(const Network& net, SearchOptions opts)
      : initial_(net), net_(net), opts_(std::move(opts)) {
    validate(opts_);
    owner_.resize(net.link_count());
    for (auto& units : owner_) units.assign(static_cast<std::size_t>(net.units()), kFree);
  }

  const Network& network() const noexcept { return net_; }
  std::size_t live() const noexcept { return live_.size(); }

  // Routes the event in the current state and occupies both routes' slots.
  // Returns the search result either way.
  Solution arrive(const TrafficEvent& ev) {
    if (!net_.has_node(ev.src) || !net_.has_node(ev.dst)) {
      throw InputError("event " + std::to_string(ev.id) + " references an unknown node");
    }
    if (live_.contains(ev.id)) {
      throw InputError("event id " + std::to_string(ev.id) + " is already live");
    }
    auto sol = solve(net_, {ev.src, ev.dst, ev.units}, opts_);
    if (sol.status == Status::routed) {
      for (const auto* r : {&sol.working, &sol.protecting}) {
        for (auto id : r->links) occupy(id, r->slots, ev.id);
      }
      live_.emplace(ev.id, Held{sol.working, sol.protecting});
    }
    return sol;
  }

  void depart(std::uint64_t id) {
    const auto it = live_.find(id);
    if (it == live_.end()) {
      throw ContractError("release of connection " + std::to_string(id) +
                          " that holds no spectrum");
    }
    for (const auto* r : {&it->second.working, &it->second.protecting}) {
      for (auto link : r->links) release(link, r->slots, id);
    }
    live_.erase(it);
  }

  // Every link's free units plus the units held by live connections give
  // back its initial availability, with no unit counted twice.
  bool conserved() const {
    for (std::size_t k = 0; k < net_.link_count(); ++k) {
      IntervalList held;
      for (Unit u = 0; u < net_.units(); ++u) {
        if (owner_[k][static_cast<std::size_t>(u)] != kFree) held.push_back({u, u + 1});
      }
      const auto& free = net_.link(static_cast<LinkId>(k)).available;
      if (!intersect(free, normalize(held)).empty()) return false;
      held.insert(held.end(), free.begin(), free.end());
      if (normalize(held) != initial_.link(static_cast<LinkId>(k)).available) return false;
    }
    return true;
  }

 private:
  static constexpr std::uint64_t kFree = ~std::uint64_t{0};

  struct Held {
    Route working;
    Route protecting;
  };

  void occupy(LinkId link, const UnitInterval& slots, std::uint64_t id) {
    auto avail = net_.link(link).available;
    if (!remove_units(avail, slots)) {
      throw ContractError("allocation of busy units on link " + std::to_string(link));
    }
    for (auto u = slots.lo; u < slots.hi; ++u) owner_[link][static_cast<std::size_t>(u)] = id;
    net_.set_available(link, std::move(avail));
  }

  void release(LinkId link, const UnitInterval& slots, std::uint64_t id) {
    for (auto u = slots.lo; u < slots.hi; ++u) {
      if (owner_[link][static_cast<std::size_t>(u)] != id) {
        throw ContractError("double release on link " + std::to_string(link));
      }
    }
    auto avail = net_.link(link).available;
    if (!restore_units(avail, slots)) {
      throw ContractError("double release on link " + std::to_string(link));
    }
    for (auto u = slots.lo; u < slots.hi; ++u) owner_[link][static_cast<std::size_t>(u)] = kFree;
    net_.set_available(link, std::move(avail));
  }

  Network initial_;
  Network net_;
  SearchOptions opts_;
  std::vector<std::vector<std::uint64_t>> owner_;
  std::unordered_map<std::uint64_t, Held> live_;
};

// Replays arrivals in (time, id) order. A connection leaves at time + hold;
// departures due at or before an arrival are processed first, and all
// remaining connections leave after the last arrival. The final state is
// written to `final_state` when given.
inline SimReport run(const Network& net, std::vector<TrafficEvent> events,
                     const SearchOptions& opts, Network* final_state = nullptr) {
  std::sort(events.begin(), events.end(), [](const auto& x, const auto& y) {
    return std::tie(x.time, x.id) < std::tie(y.time, y.id);
  });
  std::vector<std::uint64_t> ids;
  for (const auto& ev : events) ids.push_back(ev.id);
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw InputError("event ids must be unique");
  }
  for (const auto& ev : events) {
    if (!net.has_node(ev.src) || !net.has_node(ev.dst)) {
      throw InputError("event " + std::to_string(ev.id) + " references an unknown node");
    }
    validate(net, Demand{ev.src, ev.dst, ev.units});
    if (!(ev.time >= 0.0) || !(ev.hold > 0.0)) {
      throw InputError("event " + std::to_string(ev.id) +
                       " needs time >= 0 and hold > 0");
    }
  }

  Simulator sim(net, opts);
  using Departure = std::pair<double, std::uint64_t>;
  std::priority_queue<Departure, std::vector<Departure>, std::greater<>> leaving;
  SimReport rep;
  double wall = 0.0;
  std::uint64_t labels = 0;

  for (const auto& ev : events) {
    while (!leaving.empty() && leaving.top().first <= ev.time) {
      sim.depart(leaving.top().second);
      leaving.pop();
    }
    ++rep.offered;
    const auto sol = sim.arrive(ev);
    if (sol.status == Status::routed) {
      ++rep.routed;
      leaving.emplace(ev.time + ev.hold, ev.id);
    } else {
      ++rep.blocked;
    }
    labels += sol.stats.labels_generated;
    rep.max_labels_generated = std::max(rep.max_labels_generated, sol.stats.labels_generated);
    rep.max_labels_per_vertex =
        std::max(rep.max_labels_per_vertex, sol.stats.max_labels_per_vertex);
    wall += std::chrono::duration<double>(sol.stats.wall_time).count();
  }
  while (!leaving.empty()) {
    sim.depart(leaving.top().second);
    leaving.pop();
  }
  if (rep.offered > 0) {
    const auto n = static_cast<double>(rep.offered);
    rep.blocking_probability = static_cast<double>(rep.blocked) / n;
    rep.mean_labels_generated = static_cast<double>(labels) / n;
    rep.mean_wall_time_s = wall / n;
  }
  if (final_state) *final_state = sim.network();
  return rep;
}

struct TrafficParams {
  std::size_t count = 0;
  double mean_hold = 1.0;
  double mean_gap = 1.0;
  Unit units_min = 1;
  Unit units_max = 1;
  std::uint64_t seed = 0;
};

// Poisson arrivals with exponential holding times, uniform node pairs and
// uniform demand sizes.
inline std::vector<TrafficEvent> gen_traffic(const Network& net, const TrafficParams& p) {
  if (net.node_count() < 2) throw InputError("traffic needs at least 2 nodes");
  if (!(p.mean_hold > 0.0) || !(p.mean_gap > 0.0)) {
    throw InputError("mean hold and mean gap must be positive");
  }
  if (p.units_min < 1 || p.units_max < p.units_min || p.units_max > net.units()) {
    throw InputError("unit range must satisfy 1 <= min <= max <= U");
  }
  std::mt19937_64 rng(p.seed);
  std::exponential_distribution<double> gap(1.0 / p.mean_gap);
  std::exponential_distribution<double> hold(1.0 / p.mean_hold);
  std::uniform_int_distribution<std::size_t> node(0, net.node_count() - 1);
  std::uniform_int_distribution<Unit> units(p.units_min, p.units_max);
  std::vector<TrafficEvent> out;
  double t = 0.0;
  for (std::size_t i = 0; i < p.count; ++i) {
    t += gap(rng);
    const auto s = node(rng);
    auto d = node(rng);
    while (d == s) d = node(rng);
    TrafficEvent ev;
    ev.id = i;
    ev.time = t;
    ev.src = net.name(static_cast<NodeIndex>(s));
    ev.dst = net.name(static_cast<NodeIndex>(d));
    ev.units = units(rng);
    ev.hold = hold(rng);
    // Exponential draws are almost surely positive; guard the zero case.
    if (ev.hold <= 0.0) ev.hold = p.mean_hold;
    out.push_back(std::move(ev));
  }
  return out;
}

}  // namespace ddpp
