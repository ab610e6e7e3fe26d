#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace ddpp {

using Unit = std::int32_t;

// Half-open range [lo, hi) of frequency-slot units.
struct UnitInterval {
  Unit lo = 0;
  Unit hi = 0;

  constexpr Unit length() const noexcept { return hi - lo; }
  constexpr bool empty() const noexcept { return hi <= lo; }

  constexpr bool contains(const UnitInterval& other) const noexcept {
    return lo <= other.lo && other.hi <= hi;
  }

  constexpr bool contains(Unit u) const noexcept { return lo <= u && u < hi; }

  friend constexpr auto operator<=>(const UnitInterval&,
                                    const UnitInterval&) = default;
};

constexpr UnitInterval intersect(const UnitInterval& a,
                                 const UnitInterval& b) noexcept {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

// Sorted, pairwise disjoint, non-touching intervals.
using IntervalList = std::vector<UnitInterval>;

// Sorts, drops empties and merges overlapping or adjacent intervals.
inline IntervalList normalize(IntervalList list) {
  std::erase_if(list, [](const UnitInterval& iv) { return iv.empty(); });
  std::sort(list.begin(), list.end());
  IntervalList out;
  for (const auto& iv : list) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

inline bool is_normalized(std::span<const UnitInterval> list) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].empty()) return false;
    if (i > 0 && list[i].lo <= list[i - 1].hi) return false;
  }
  return true;
}

// Maximal pieces of `range` covered by `list` that are at least `min_length`
// units long. `list` must be normalized.
inline IntervalList intersect(const UnitInterval& range,
                              std::span<const UnitInterval> list,
                              Unit min_length = 1) {
  IntervalList out;
  for (const auto& iv : list) {
    if (iv.lo >= range.hi) break;
    const auto piece = intersect(range, iv);
    if (!piece.empty() && piece.length() >= min_length) out.push_back(piece);
  }
  return out;
}

inline IntervalList intersect(std::span<const UnitInterval> a,
                              std::span<const UnitInterval> b,
                              Unit min_length = 1) {
  IntervalList out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const auto piece = intersect(a[i], b[j]);
    if (!piece.empty() && piece.length() >= min_length) out.push_back(piece);
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

inline bool covers(std::span<const UnitInterval> list,
                   const UnitInterval& range) {
  return std::any_of(list.begin(), list.end(),
                     [&](const UnitInterval& iv) { return iv.contains(range); });
}

// Removes `range` from a normalized list. Returns false (and leaves the list
// untouched) when some unit of `range` is not present.
inline bool remove_units(IntervalList& list, const UnitInterval& range) {
  auto it = std::find_if(list.begin(), list.end(), [&](const UnitInterval& iv) {
    return iv.contains(range);
  });
  if (it == list.end()) return false;
  const UnitInterval left{it->lo, range.lo};
  const UnitInterval right{range.hi, it->hi};
  it = list.erase(it);
  if (!right.empty()) it = list.insert(it, right);
  if (!left.empty()) list.insert(it, left);
  return true;
}

// Adds `range` back to a normalized list. Returns false (and leaves the list
// untouched) when some unit of `range` is already present.
inline bool restore_units(IntervalList& list, const UnitInterval& range) {
  for (const auto& iv : list) {
    if (!intersect(iv, range).empty()) return false;
  }
  list.push_back(range);
  list = normalize(std::move(list));
  return true;
}

}  // namespace ddpp
