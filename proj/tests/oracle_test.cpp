#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ddpp/compare.hpp"
#include "ddpp/oracle.hpp"

namespace ddpp {
namespace {

Network path_of(std::vector<IntervalList> avail, Unit units = 8) {
  std::vector<std::string> nodes;
  std::vector<Link> links;
  for (std::size_t i = 0; i <= avail.size(); ++i) nodes.push_back("p" + std::to_string(i));
  for (std::size_t i = 0; i < avail.size(); ++i) {
    links.push_back({static_cast<LinkId>(i),
                     {static_cast<NodeIndex>(i), static_cast<NodeIndex>(i + 1)}, 1, avail[i]});
  }
  return Network(units, std::move(nodes), std::move(links));
}

TEST(RouteIntervals, UnitwiseIntersection) {
  const auto net = path_of({{{0, 4}}, {{2, 8}}});
  // Units free on both links: 2 and 3.
  std::vector<Unit> both;
  for (Unit u = 0; u < 8; ++u) {
    if (UnitInterval{0, 4}.contains(u) && UnitInterval{2, 8}.contains(u)) both.push_back(u);
  }
  ASSERT_EQ(both, (std::vector<Unit>{2, 3}));
  const std::vector<LinkId> route{0, 1};
  EXPECT_EQ(route_intervals(net, route, 2), (IntervalList{{2, 4}}));
  EXPECT_TRUE(route_intervals(net, route, 3).empty());
}

TEST(RouteIntervals, EmptyLinkKillsTheRoute) {
  const auto net = path_of({{{0, 8}}, {}, {{0, 8}}});
  const std::vector<LinkId> route{0, 1, 2};
  EXPECT_TRUE(route_intervals(net, route, 1).empty());
}

TEST(RouteIntervals, SingleLink) {
  const auto net = path_of({{{0, 1}, {3, 6}}});
  const std::vector<LinkId> route{0};
  EXPECT_EQ(route_intervals(net, route, 2), (IntervalList{{3, 6}}));
  EXPECT_EQ(route_intervals(net, route, 1), (IntervalList{{0, 1}, {3, 6}}));
}

TEST(RouteIntervals, RejectsMalformedRoutes) {
  const auto net = path_of({{{0, 8}}, {{0, 8}}, {{0, 8}}});
  const std::vector<LinkId> gap{0, 2};
  const std::vector<LinkId> repeat{0, 0};
  const std::vector<LinkId> unknown{7};
  EXPECT_THROW(route_intervals(net, gap, 1), InputError);
  EXPECT_THROW(route_intervals(net, repeat, 1), InputError);
  EXPECT_THROW(route_intervals(net, unknown, 1), InputError);
}

TEST(RouteIntervals, FoldIsOrderIndependent) {
  std::mt19937 rng(17);
  std::bernoulli_distribution coin(0.7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<IntervalList> lists(5);
    for (auto& l : lists) {
      for (Unit u = 0; u < 10; ++u) {
        if (coin(rng)) l.push_back({u, u + 1});
      }
      l = normalize(l);
    }
    const auto net = path_of(lists, 10);
    const std::vector<LinkId> route{0, 1, 2, 3, 4};
    const auto want = route_intervals(net, route, 1);
    for (int p = 0; p < 5; ++p) {
      std::shuffle(lists.begin(), lists.end(), rng);
      IntervalList fold{{0, 10}};
      for (const auto& l : lists) fold = intersect(fold, l);
      ASSERT_EQ(fold, want);
    }
  }
}

TEST(OracleSolve, Lobe) {
  const auto res = oracle_solve(lobe_network(2, 1), {"n_s", "n_x", 1});
  ASSERT_TRUE(res.routed);
  EXPECT_EQ(res.min_cost, 7);
  EXPECT_EQ(res.pair_count, 4U);
  EXPECT_EQ(res.route_count, 8U);
}

TEST(OracleSolve, SingleLinkIsBlocked) {
  const Network net(8, {"a", "b"}, {{0, {0, 1}, 100, {{0, 8}}}});
  const auto res = oracle_solve(net, {"a", "b", 1});
  EXPECT_FALSE(res.routed);
  EXPECT_EQ(res.pair_count, 0U);
}

TEST(OracleSolve, Triangle) {
  const Network net(8, {"a", "b", "c"},
                    {{0, {0, 1}, 1, {{0, 8}}}, {1, {1, 2}, 1, {{0, 8}}}, {2, {0, 2}, 5, {{0, 4}}}});
  const auto res = oracle_solve(net, {"a", "c", 2});
  ASSERT_TRUE(res.routed);
  EXPECT_EQ(res.min_cost, 7);
  EXPECT_EQ(res.pair_count, 1U);
  EXPECT_EQ(res.witness.route_a, (std::vector<LinkId>{0, 1}));
  EXPECT_EQ(res.witness.route_b, (std::vector<LinkId>{2}));
  EXPECT_EQ(res.witness.intervals_b, (IntervalList{{0, 4}}));
}

TEST(OracleSolve, RouteCostLimit) {
  const auto net = lobe_network(3, 1);
  // Every pair costs 15; the most balanced split is (7, 8).
  EXPECT_EQ(oracle_solve(net, {"n_s", "n_x", 1}, 8).min_cost, 15);
  EXPECT_FALSE(oracle_solve(net, {"n_s", "n_x", 1}, 7).routed);
}

TEST(OracleSolve, BudgetOverrunIsAnError) {
  EXPECT_THROW(oracle_solve(lobe_network(6, 1), {"n_s", "n_x", 1}, {}, {}, 100), BudgetExceeded);
}

TEST(Compare, LobesAgreeInBothModes) {
  for (int m = 1; m <= 6; ++m) {
    const auto rep = compare(lobe_network(m, 1), {"n_s", "n_x", 1});
    EXPECT_TRUE(rep.agree);
    ASSERT_TRUE(rep.base && rep.prime);
    EXPECT_EQ(rep.oracle.min_cost, (Cost{1} << (m + 1)) - 1);
  }
}

TEST(Compare, BlockedOnBothSides) {
  const Network net(8, {"a", "b"}, {{0, {0, 1}, 100, {{0, 8}}}});
  const auto rep = compare(net, {"a", "b", 1});
  EXPECT_TRUE(rep.agree);
  EXPECT_EQ(rep.base->status, Status::blocked);
  EXPECT_EQ(rep.prime->status, Status::blocked);
}

TEST(Compare, LimitedRunsBaseOnly) {
  SearchOptions o;
  o.max_route_cost = 8;
  const auto rep = compare(lobe_network(3, 1), {"n_s", "n_x", 1}, o);
  EXPECT_TRUE(rep.agree);
  EXPECT_TRUE(rep.base.has_value());
  EXPECT_FALSE(rep.prime.has_value());
}

TEST(Compare, RandomCorpusAgrees) {
  for (const auto& in : make_corpus(150, 9)) {
    ASSERT_TRUE(compare(in.net, in.demand).agree);
  }
}

TEST(Compare, BundleIsSelfContained) {
  const auto net = lobe_network(2, 1);
  const Demand d{"n_s", "n_x", 1};
  auto rep = compare(net, d);
  // Fake a disagreement to exercise the bundle.
  rep.oracle.min_cost = 6;
  EXPECT_FALSE(matches(rep.oracle, *rep.prime));
  const auto doc = counterexample_bundle(net, d, {}, rep);
  EXPECT_EQ(io::network_from_json(doc["network"]), net);
  EXPECT_EQ(io::demand_from_json(doc["demand"]), d);
  EXPECT_EQ(doc["oracle"]["cost"], 6);
  EXPECT_EQ(doc["prime"]["cost"], 7);
  EXPECT_EQ(doc["base"]["cost"], 7);
}

}  // namespace
}  // namespace ddpp
