#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ddpp {

using LinkId = std::uint32_t;

// Fixed-capacity bitset over link ids 0..L-1.
class LinkSet {
 public:
  LinkSet() = default;
  explicit LinkSet(std::size_t link_count) : words_((link_count + 63) / 64, 0) {}

  bool contains(LinkId id) const noexcept {
    const auto w = id / 64;
    return w < words_.size() && ((words_[w] >> (id % 64)) & 1U) != 0;
  }

  void insert(LinkId id) {
    const auto w = id / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (id % 64);
  }

  bool disjoint(const LinkSet& other) const noexcept {
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if ((words_[i] & other.words_[i]) != 0) return false;
    }
    return true;
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept { return size() == 0; }

  friend bool operator==(const LinkSet& a, const LinkSet& b) {
    const auto& shorter = a.words_.size() <= b.words_.size() ? a : b;
    const auto& longer = a.words_.size() <= b.words_.size() ? b : a;
    for (std::size_t i = 0; i < longer.words_.size(); ++i) {
      const auto s = i < shorter.words_.size() ? shorter.words_[i] : 0;
      if (s != longer.words_[i]) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace ddpp
