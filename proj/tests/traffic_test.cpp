#include <gtest/gtest.h>

#include "ddpp/io.hpp"
#include "ddpp/traffic.hpp"

namespace ddpp {
namespace {

TrafficEvent event(std::uint64_t id, double time, double hold, Unit units = 1) {
  return {id, time, "n_s", "n_x", units, hold};
}

TEST(Run, EmptyTraffic) {
  const auto rep = run(lobe_network(2, 1), {}, {});
  EXPECT_EQ(rep.offered, 0U);
  EXPECT_EQ(rep.blocking_probability, 0.0);
}

TEST(Run, SingleUnitLobeIsHeldThenFreed) {
  // Any protected pair on lobe(2, 1) uses all six links, so while the first
  // connection holds the only unit the second is blocked; the third arrives
  // after the departure at t = 10.
  const auto net = lobe_network(2, 1);
  Network after;
  const auto rep = run(net, {event(0, 0.0, 10.0), event(1, 1.0, 5.0), event(2, 20.0, 1.0)}, {}, &after);
  EXPECT_EQ(rep.offered, 3U);
  EXPECT_EQ(rep.routed, 2U);
  EXPECT_EQ(rep.blocked, 1U);
  EXPECT_DOUBLE_EQ(rep.blocking_probability, 1.0 / 3.0);
  EXPECT_EQ(after, net);
}

TEST(Run, DepartureAtArrivalTimeFreesFirst) {
  const auto net = lobe_network(2, 1);
  const auto rep = run(net, {event(0, 0.0, 2.0), event(1, 2.0, 1.0)}, {});
  EXPECT_EQ(rep.routed, 2U);
}

TEST(Run, ProcessesInTimeThenIdOrder) {
  const auto net = lobe_network(2, 1);
  // Listed out of order; id 3 at t = 0 goes first and blocks id 1.
  const auto rep = run(net, {event(1, 0.0, 1.0), event(3, 0.0, 1.0)}, {});
  EXPECT_EQ(rep.routed, 1U);
  EXPECT_EQ(rep.blocked, 1U);
}

TEST(Run, RejectsInvalidEvents) {
  const auto net = lobe_network(2, 1);
  TrafficEvent bad = event(0, 0.0, 1.0);
  bad.dst = "nowhere";
  EXPECT_THROW(run(net, {bad}, {}), InputError);
  EXPECT_THROW(run(net, {event(0, 0.0, 1.0), event(0, 1.0, 1.0)}, {}), InputError);
  EXPECT_THROW(run(net, {event(0, 0.0, 0.0)}, {}), InputError);
  EXPECT_THROW(run(net, {event(0, 0.0, 1.0, 2)}, {}), InputError);
}

TEST(Simulator, DoubleReleaseIsABreach) {
  Simulator sim(lobe_network(2, 1), {});
  ASSERT_EQ(sim.arrive(event(0, 0.0, 1.0)).status, Status::routed);
  sim.depart(0);
  EXPECT_THROW(sim.depart(0), ContractError);
}

TEST(Simulator, SpectrumIsConservedAtEveryStep) {
  const auto net = random_network({8, 3.0, 8, 0.8, 12});
  const auto events = gen_traffic(net, {300, 4.0, 0.5, 1, 3, 12});
  Simulator sim(net, {});
  std::vector<std::pair<double, std::uint64_t>> live;
  for (const auto& ev : events) {
    std::erase_if(live, [&](const auto& d) {
      if (d.first > ev.time) return false;
      sim.depart(d.second);
      return true;
    });
    ASSERT_TRUE(sim.conserved());
    if (sim.arrive(ev).status == Status::routed) live.emplace_back(ev.time + ev.hold, ev.id);
    ASSERT_TRUE(sim.conserved());
  }
  for (const auto& d : live) sim.depart(d.second);
  EXPECT_EQ(sim.live(), 0U);
  EXPECT_EQ(sim.network(), net);
}

TEST(Run, ReplayIsIdenticalThroughTheTrafficFile) {
  const auto net = random_network({7, 3.0, 6, 0.9, 4});
  const auto events = gen_traffic(net, {200, 3.0, 0.4, 1, 2, 4});
  const auto reread = io::traffic_from_json(io::parse(io::to_json(events).dump(), "traffic"));
  ASSERT_EQ(reread, events);
  EXPECT_EQ(run(net, events, {}), run(net, reread, {}));
}

TEST(GenTraffic, Shapes) {
  const auto net = lobe_network(3, 4);
  EXPECT_TRUE(gen_traffic(net, {}).empty());
  const auto events = gen_traffic(net, {100, 2.0, 1.0, 1, 1, 7});
  ASSERT_EQ(events.size(), 100U);
  for (std::size_t i = 0; i < events.size(); ++i) {
    EXPECT_EQ(events[i].id, i);
    EXPECT_EQ(events[i].units, 1);
    EXPECT_NE(events[i].src, events[i].dst);
    EXPECT_GT(events[i].hold, 0.0);
    if (i > 0) {
      EXPECT_GT(events[i].time, events[i - 1].time);
    }
  }
  EXPECT_EQ(gen_traffic(net, {100, 2.0, 1.0, 1, 1, 7}), events);
}

TEST(GenTraffic, RejectsDegenerateInput) {
  const Network lone(4, {"a"}, {});
  EXPECT_THROW(gen_traffic(lone, {1, 1.0, 1.0, 1, 1, 0}), InputError);
  EXPECT_THROW(gen_traffic(lobe_network(1, 2), {1, 1.0, 1.0, 1, 3, 0}), InputError);
}

}  // namespace
}  // namespace ddpp
