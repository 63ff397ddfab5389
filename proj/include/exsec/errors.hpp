#pragma once

#include <stdexcept>

namespace exsec {

// Argument or configuration outside the model's domain.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The model has no feasible answer at the requested point.
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File access or file content failure; the message carries the path.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace exsec
