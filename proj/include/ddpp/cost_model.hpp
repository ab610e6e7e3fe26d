#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ddpp/errors.hpp"
#include "ddpp/network.hpp"

namespace ddpp {

// Route cost as a function of route length (sum of link costs). With no
// steps the cost is the length itself; otherwise it is
// length * coefficient(length), the coefficient taken from the last step
// whose `from_length` does not exceed the length.
class CostModel {
 public:
  struct Step {
    Cost from_length = 0;
    Cost coefficient = 1;
    friend bool operator==(const Step&, const Step&) = default;
  };

  CostModel() = default;

  static CostModel additive() { return {}; }

  static CostModel modulation(std::vector<Step> steps) {
    if (steps.empty() || steps.front().from_length != 0) {
      throw InputError("modulation table must start at length 0");
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i].coefficient < 1) {
        throw InputError("modulation coefficients must be positive");
      }
      if (i > 0 && (steps[i].from_length <= steps[i - 1].from_length ||
                    steps[i].coefficient < steps[i - 1].coefficient)) {
        throw InputError(
            "modulation table must have increasing lengths and "
            "nondecreasing coefficients");
      }
    }
    CostModel m;
    m.steps_ = std::move(steps);
    return m;
  }

  bool is_additive() const noexcept { return steps_.empty(); }
  const std::vector<Step>& steps() const noexcept { return steps_; }

  Cost coefficient(Cost length) const noexcept {
    Cost c = 1;
    for (const auto& s : steps_) {
      if (s.from_length > length) break;
      c = s.coefficient;
    }
    return c;
  }

  Cost route_cost(Cost length) const noexcept {
    return is_additive() ? length : length * coefficient(length);
  }

 private:
  std::vector<Step> steps_;
};

}  // namespace ddpp
