#pragma once

// JSON documents: network, demand, cost model, result, traffic, report.

#include <chrono>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ddpp/cost_model.hpp"
#include "ddpp/errors.hpp"
#include "ddpp/network.hpp"
#include "ddpp/oracle.hpp"
#include "ddpp/search.hpp"
#include "ddpp/traffic.hpp"

namespace ddpp::io {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

template <typename T>
T integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<T>();
}

inline double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where + ": expected a number");
  return v.get<double>();
}

inline std::string string(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": expected a string");
  return v.get<std::string>();
}

inline const json& array(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array");
  return v;
}

inline UnitInterval interval(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) {
    throw InputError(where + ": interval must be [lo, hi]");
  }
  return {integer<Unit>(v[0], where), integer<Unit>(v[1], where)};
}

}  // namespace detail

inline json parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json to_json(const UnitInterval& iv) { return json::array({iv.lo, iv.hi}); }

inline json to_json(const IntervalList& list) {
  auto out = json::array();
  for (const auto& iv : list) out.push_back(to_json(iv));
  return out;
}

inline Network network_from_json(const json& doc) {
  using namespace detail;
  const auto units = integer<Unit>(field(doc, "units", "network"), "network.units");
  std::vector<std::string> nodes;
  std::unordered_map<std::string, NodeIndex> index;
  for (const auto& n : array(field(doc, "nodes", "network"), "network.nodes")) {
    nodes.push_back(string(n, "network.nodes[" + std::to_string(nodes.size()) + "]"));
    index.emplace(nodes.back(), static_cast<NodeIndex>(nodes.size() - 1));
  }
  std::vector<Link> links;
  std::vector<bool> seen;
  const auto& raw = array(field(doc, "links", "network"), "network.links");
  links.resize(raw.size());
  seen.assign(raw.size(), false);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto where = "network.links[" + std::to_string(i) + "]";
    const auto& l = raw[i];
    const auto id = integer<std::int64_t>(field(l, "id", where), where + ".id");
    if (id < 0 || static_cast<std::size_t>(id) >= raw.size()) {
      throw InputError(where + ": link id " + std::to_string(id) +
                       " outside dense range 0.." + std::to_string(raw.size() - 1));
    }
    if (seen[static_cast<std::size_t>(id)]) {
      throw InputError(where + ": duplicate link id " + std::to_string(id));
    }
    seen[static_cast<std::size_t>(id)] = true;
    const auto& ends = field(l, "ends", where);
    if (!ends.is_array() || ends.size() != 2) {
      throw InputError(where + ": ends must name two nodes");
    }
    NodeIndex e[2];
    for (int k = 0; k < 2; ++k) {
      const auto name = string(ends[k], where + ".ends");
      const auto it = index.find(name);
      if (it == index.end()) {
        throw InputError(where + ": dangling endpoint '" + name + "'");
      }
      e[k] = it->second;
    }
    Link link;
    link.id = static_cast<LinkId>(id);
    link.ends = {e[0], e[1]};
    link.cost = integer<Cost>(field(l, "cost", where), where + ".cost");
    for (const auto& iv : array(field(l, "available", where), where + ".available")) {
      const auto parsed = detail::interval(iv, where + ".available");
      if (parsed.lo >= parsed.hi) {
        throw InputError(where + ": empty or reversed interval [" +
                         std::to_string(parsed.lo) + "," + std::to_string(parsed.hi) + "]");
      }
      if (parsed.lo < 0 || parsed.hi > units) {
        throw InputError(where + ": interval [" + std::to_string(parsed.lo) + "," +
                         std::to_string(parsed.hi) + "] exceeds unit count " +
                         std::to_string(units));
      }
      link.available.push_back(parsed);
    }
    links[link.id] = std::move(link);
  }
  try {
    return Network(units, std::move(nodes), std::move(links));
  } catch (const InputError& e) {
    throw InputError(std::string("network: ") + e.what());
  }
}

inline Network load_network(const std::string& text) {
  return network_from_json(parse(text, "network"));
}

inline json to_json(const Network& net) {
  json doc;
  doc["units"] = net.units();
  doc["nodes"] = json::array();
  for (const auto& n : net.nodes()) doc["nodes"].push_back(n);
  doc["links"] = json::array();
  for (const auto& l : net.links()) {
    doc["links"].push_back({{"id", l.id},
                            {"ends", {net.name(l.ends.first), net.name(l.ends.second)}},
                            {"cost", l.cost},
                            {"available", to_json(l.available)}});
  }
  return doc;
}

inline Demand demand_from_json(const json& doc) {
  using namespace detail;
  Demand d;
  d.src = string(field(doc, "src", "demand"), "demand.src");
  d.dst = string(field(doc, "dst", "demand"), "demand.dst");
  d.units = integer<Unit>(field(doc, "units", "demand"), "demand.units");
  return d;
}

inline json to_json(const Demand& d) {
  return {{"src", d.src}, {"dst", d.dst}, {"units", d.units}};
}

// { "modulation": [ { "from_length": 0, "coefficient": 1 }, ... ] }
inline CostModel cost_model_from_json(const json& doc) {
  using namespace detail;
  std::vector<CostModel::Step> steps;
  const auto& raw = array(field(doc, "modulation", "cost model"), "cost model.modulation");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto where = "cost model.modulation[" + std::to_string(i) + "]";
    steps.push_back({integer<Cost>(field(raw[i], "from_length", where), where),
                     integer<Cost>(field(raw[i], "coefficient", where), where)});
  }
  return CostModel::modulation(std::move(steps));
}

inline json to_json(const CostModel& m) {
  auto steps = json::array();
  for (const auto& s : m.steps()) {
    steps.push_back({{"from_length", s.from_length}, {"coefficient", s.coefficient}});
  }
  return {{"modulation", steps}};
}

inline json to_json(const SearchStats& s) {
  return {{"labels_generated", s.labels_generated},
          {"labels_dominated", s.labels_dominated},
          {"labels_settled", s.labels_settled},
          {"queue_pops", s.queue_pops},
          {"max_labels_per_vertex", s.max_labels_per_vertex},
          {"labels_at_destination", s.labels_at_destination},
          {"wall_time_s", std::chrono::duration<double>(s.wall_time).count()}};
}

inline json to_json(const Route& r) {
  return {{"nodes", r.nodes},
          {"links", r.links},
          {"slots", to_json(r.slots)},
          {"cost", r.cost}};
}

inline json to_json(const Solution& s) {
  json doc;
  doc["status"] = s.status == Status::routed ? "routed" : "blocked";
  if (s.status == Status::routed) {
    doc["cost"] = s.total_cost;
    doc["working"] = to_json(s.working);
    doc["protecting"] = to_json(s.protecting);
  }
  doc["stats"] = to_json(s.stats);
  return doc;
}

inline json to_json(const OracleResult& r) {
  json doc;
  doc["status"] = r.routed ? "routed" : "blocked";
  if (r.routed) {
    doc["cost"] = r.min_cost;
    doc["route_a"] = {{"links", r.witness.route_a},
                      {"cost", r.witness.cost_a},
                      {"intervals", to_json(r.witness.intervals_a)}};
    doc["route_b"] = {{"links", r.witness.route_b},
                      {"cost", r.witness.cost_b},
                      {"intervals", to_json(r.witness.intervals_b)}};
  }
  doc["pair_count"] = r.pair_count;
  doc["route_count"] = r.route_count;
  return doc;
}

inline std::vector<TrafficEvent> traffic_from_json(const json& doc) {
  using namespace detail;
  std::vector<TrafficEvent> out;
  const auto& raw = array(field(doc, "events", "traffic"), "traffic.events");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto where = "traffic.events[" + std::to_string(i) + "]";
    const auto& e = raw[i];
    TrafficEvent ev;
    ev.id = integer<std::uint64_t>(field(e, "id", where), where + ".id");
    ev.time = number(field(e, "time", where), where + ".time");
    ev.src = string(field(e, "src", where), where + ".src");
    ev.dst = string(field(e, "dst", where), where + ".dst");
    ev.units = integer<Unit>(field(e, "units", where), where + ".units");
    ev.hold = number(field(e, "hold", where), where + ".hold");
    out.push_back(std::move(ev));
  }
  return out;
}

inline json to_json(const std::vector<TrafficEvent>& events) {
  auto list = json::array();
  for (const auto& e : events) {
    list.push_back({{"id", e.id},
                    {"time", e.time},
                    {"src", e.src},
                    {"dst", e.dst},
                    {"units", e.units},
                    {"hold", e.hold}});
  }
  return {{"events", list}};
}

inline json to_json(const SimReport& r) {
  return {{"offered", r.offered},
          {"routed", r.routed},
          {"blocked", r.blocked},
          {"blocking_probability", r.blocking_probability},
          {"mean_labels_generated", r.mean_labels_generated},
          {"max_labels_generated", r.max_labels_generated},
          {"max_labels_per_vertex", r.max_labels_per_vertex},
          {"mean_wall_time_s", r.mean_wall_time_s}};
}

}  // namespace ddpp::io
