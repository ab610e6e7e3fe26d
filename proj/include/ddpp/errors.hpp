#pragma once

#include <stdexcept>
#include <string>

namespace ddpp {

// Malformed or inconsistent caller input (documents, demands, options).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant or a relation called outside its domain.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The brute-force enumeration hit its pair budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ddpp
