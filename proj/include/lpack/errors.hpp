#pragma once

#include <stdexcept>
#include <string>

namespace lpack {

// Malformed input: bad file contents, out-of-range vertex, invalid parameter.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input is well-formed but violates an operation's precondition
// (graph not regular, degree above 3, all-c K4 component, ...).
class precondition_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Instance exceeds a configured size or attempt limit.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No feasible solution exists (e.g. l-tuple domination with l > min degree + 1).
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lpack
