#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <vector>

#include "ddpp/io.hpp"
#include "ddpp/network.hpp"
#include "ddpp/oracle.hpp"
#include "ddpp/search.hpp"

namespace ddpp {

struct CompareReport {
  OracleResult oracle;
  std::optional<Solution> base;
  std::optional<Solution> prime;
  bool agree = true;
};

inline bool matches(const OracleResult& o, const Solution& s) {
  if (!o.routed) return s.status == Status::blocked;
  return s.status == Status::routed && s.total_cost == o.min_cost;
}

// Runs the search in both relations (base only when a route cost limit is
// set) and the brute-force oracle on one instance.
inline CompareReport compare(const Network& net, const Demand& demand,
                             const SearchOptions& opts = {},
                             std::uint64_t budget = kDefaultOracleBudget) {
  CompareReport rep;
  rep.oracle = oracle_solve(net, demand, opts.max_route_cost, opts.cost_model, budget);
  auto o = opts;
  o.mode = Relation::base;
  rep.base = solve(net, demand, o);
  rep.agree = matches(rep.oracle, *rep.base);
  if (!opts.max_route_cost) {
    o.mode = Relation::prime;
    rep.prime = solve(net, demand, o);
    rep.agree = rep.agree && matches(rep.oracle, *rep.prime);
  }
  return rep;
}

// Self-contained replay document for a disagreement.
inline io::json counterexample_bundle(const Network& net, const Demand& demand,
                                      const SearchOptions& opts,
                                      const CompareReport& rep) {
  io::json doc;
  doc["network"] = io::to_json(net);
  doc["demand"] = io::to_json(demand);
  if (opts.max_route_cost) doc["max_route_cost"] = *opts.max_route_cost;
  if (!opts.cost_model.is_additive()) doc["cost_model"] = io::to_json(opts.cost_model);
  doc["oracle"] = io::to_json(rep.oracle);
  if (rep.base) doc["base"] = io::to_json(*rep.base);
  if (rep.prime) doc["prime"] = io::to_json(*rep.prime);
  return doc;
}

struct Instance {
  Network net;
  Demand demand;
};

// Deterministic desk-scale corpus: 3..8 nodes, average degree up to 3,
// U in {4, 6, 8}, fill in {0.5, 0.7, 1.0}, demands of 1..3 units.
inline std::vector<Instance> make_corpus(std::size_t count, std::uint64_t seed) {
  static constexpr std::array<double, 3> kDegree{2.0, 2.5, 3.0};
  static constexpr std::array<Unit, 3> kUnits{4, 6, 8};
  static constexpr std::array<double, 3> kFill{0.5, 0.7, 1.0};
  std::vector<Instance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(seed * 1'000'003 + i);
    auto pick = [&rng](std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };
    RandomNetworkParams p;
    p.nodes = 3 + pick(6);
    p.avg_degree = std::min(kDegree[pick(3)], static_cast<double>(p.nodes - 1));
    p.units = kUnits[pick(3)];
    p.fill = kFill[pick(3)];
    p.seed = rng();
    auto net = random_network(p);
    const auto s = static_cast<NodeIndex>(pick(p.nodes));
    auto d = static_cast<NodeIndex>(pick(p.nodes));
    while (d == s) d = static_cast<NodeIndex>(pick(p.nodes));
    const auto units = static_cast<Unit>(1 + pick(3));
    Demand demand{net.name(s), net.name(d), units};
    out.push_back({std::move(net), std::move(demand)});
  }
  return out;
}

}  // namespace ddpp
