#pragma once

#include <stdexcept>
#include <string>

namespace modkernel {

// Malformed input: bad vertex ids, syntax errors, wrong solution sense.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exact routine refused to run because the input exceeds its size cap.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace modkernel
