#pragma once

#include <stdexcept>
#include <string>

namespace ks {

// Malformed or inconsistent input (parse failures, dimension mismatches,
// non-orthogonal contexts). Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was asked to run outside its declared domain, e.g. the
// vertex-transitive shortcut on a graph that is not vertex-transitive.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource limit (enumeration budget, iteration cap) was hit.
// Maps to CLI exit code 3.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ks
