#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddpp/cost_model.hpp"
#include "ddpp/errors.hpp"
#include "ddpp/interval.hpp"
#include "ddpp/link_set.hpp"
#include "ddpp/network.hpp"

namespace ddpp {

// Summary of one partial route: its cost, its length and one contiguous
// block of units free on all of its links.
struct Trait {
  Cost cost = 0;
  Cost length = 0;
  UnitInterval ri;

  friend bool operator==(const Trait&, const Trait&) = default;
};

// t_i is better than or equal to t_j: no costlier and offers every unit t_j
// offers.
inline bool trait_leq(const Trait& ti, const Trait& tj) noexcept {
  return ti.cost <= tj.cost && ti.ri.contains(tj.ri);
}

// Candidate traits after appending `link`: one per maximal block of
// ri(t) ∩ available(link) that still holds `demand` units.
inline std::vector<Trait> trait_extend(const Trait& t, const Link& link,
                                       Unit demand,
                                       const CostModel& model = {}) {
  std::vector<Trait> out;
  const auto length = t.length + link.cost;
  const auto cost = model.route_cost(length);
  for (const auto& piece : intersect(t.ri, link.available, demand)) {
    out.push_back({cost, length, piece});
  }
  return out;
}

// Canonical unordered node pair, a <= b.
struct Vertex {
  NodeIndex a = 0;
  NodeIndex b = 0;

  static constexpr Vertex of(NodeIndex x, NodeIndex y) noexcept {
    return x <= y ? Vertex{x, y} : Vertex{y, x};
  }
  constexpr bool same_node() const noexcept { return a == b; }

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

enum class Side : std::uint8_t { a, b };

// Pair of traits reached at a vertex. Slot a holds the route ending at
// vertex.a. `route_in_a` records which of the two routes started at the
// source occupies slot a, so the parent chain can be split back into routes.
struct Label {
  Trait ta;
  Trait tb;
  Vertex vertex;
  std::optional<std::size_t> parent;
  std::optional<LinkId> appended_link;
  LinkSet used;
  std::uint8_t route_in_a = 0;
  std::uint8_t extended_route = 0;

  const Trait& trait(Side s) const noexcept { return s == Side::a ? ta : tb; }
};

// Zero-cost, full-spectrum start at (src, src).
inline Label root_label(const Network& net, NodeIndex src) {
  const Trait t{0, 0, {0, net.units()}};
  return Label{t, t, Vertex::of(src, src), std::nullopt, std::nullopt,
               LinkSet(net.link_count()), 0, 0};
}

// Labels derived by appending `link` to the route of slot `side`. The vertex
// is re-canonicalized, swapping trait slots when the node order flips.
inline std::vector<Label> label_extend(const Label& l, const Link& link,
                                       Side side, Unit demand,
                                       const CostModel& model = {},
                                       std::optional<std::size_t> parent = {}) {
  const auto here = side == Side::a ? l.vertex.a : l.vertex.b;
  const auto there = side == Side::a ? l.vertex.b : l.vertex.a;
  if (!link.touches(here)) {
    throw ContractError("link " + std::to_string(link.id) +
                        " is not incident to the extended route end");
  }
  if (l.used.contains(link.id)) {
    throw ContractError("link " + std::to_string(link.id) +
                        " already used by the path");
  }
  const auto next = link.other(here);
  const auto& kept = side == Side::a ? l.tb : l.ta;
  const auto moved_route = static_cast<std::uint8_t>(
      side == Side::a ? l.route_in_a : 1 - l.route_in_a);
  // The moved route lands in slot a unless the new node sorts after the
  // untouched end.
  const bool moved_in_a = next <= there;

  std::vector<Label> out;
  for (const auto& t : trait_extend(l.trait(side), link, demand, model)) {
    Label c;
    c.vertex = Vertex::of(next, there);
    c.ta = moved_in_a ? t : kept;
    c.tb = moved_in_a ? kept : t;
    c.route_in_a =
        moved_in_a ? moved_route : static_cast<std::uint8_t>(1 - moved_route);
    c.extended_route = moved_route;
    c.parent = parent;
    c.appended_link = link.id;
    c.used = l.used;
    c.used.insert(link.id);
    out.push_back(std::move(c));
  }
  return out;
}

inline Cost label_cost(const Label& l) noexcept { return l.ta.cost + l.tb.cost; }

// Componentwise comparison for labels at a vertex of two distinct nodes.
inline bool leq_ne(const Label& li, const Label& lj) {
  if (li.vertex.same_node() || lj.vertex.same_node()) {
    throw ContractError("leq_ne needs a vertex of two distinct nodes");
  }
  return trait_leq(li.ta, lj.ta) && trait_leq(li.tb, lj.tb);
}

// Normal comparison of same-node labels.
inline bool leq_n(const Label& li, const Label& lj) noexcept {
  return trait_leq(li.ta, lj.ta) && trait_leq(li.tb, lj.tb);
}

// Cross comparison of same-node labels.
inline bool leq_x(const Label& li, const Label& lj) noexcept {
  return trait_leq(li.ta, lj.tb) && trait_leq(li.tb, lj.ta);
}

inline bool leq_eq(const Label& li, const Label& lj) noexcept {
  return leq_n(li, lj) || leq_x(li, lj);
}

inline bool ri_incl_ne(const Label& li, const Label& lj) noexcept {
  return li.ta.ri.contains(lj.ta.ri) && li.tb.ri.contains(lj.tb.ri);
}

inline bool ri_incl_n(const Label& li, const Label& lj) noexcept {
  return ri_incl_ne(li, lj);
}

inline bool ri_incl_x(const Label& li, const Label& lj) noexcept {
  return li.ta.ri.contains(lj.tb.ri) && li.tb.ri.contains(lj.ta.ri);
}

inline bool ri_incl_eq(const Label& li, const Label& lj) noexcept {
  return ri_incl_n(li, lj) || ri_incl_x(li, lj);
}

// Lower-or-equal label cost with resource inclusion; the inclusion flavour
// follows the vertex kind.
inline bool leq_prime(const Label& li, const Label& lj) {
  if (li.vertex != lj.vertex) {
    throw ContractError("labels compared across different vertices");
  }
  if (label_cost(li) > label_cost(lj)) return false;
  return li.vertex.same_node() ? ri_incl_eq(li, lj) : ri_incl_ne(li, lj);
}

enum class Relation : std::uint8_t { base, prime };

inline const char* to_string(Relation r) noexcept {
  return r == Relation::base ? "base" : "prime";
}

inline Relation parse_relation(const std::string& s) {
  if (s == "base") return Relation::base;
  if (s == "prime") return Relation::prime;
  throw InputError("unknown relation '" + s + "' (expected base or prime)");
}

inline bool dominates(Relation mode, const Label& li, const Label& lj) {
  if (li.vertex != lj.vertex) {
    throw ContractError("labels compared across different vertices");
  }
  if (mode == Relation::prime) return leq_prime(li, lj);
  return li.vertex.same_node() ? leq_eq(li, lj) : leq_ne(li, lj);
}

}  // namespace ddpp
