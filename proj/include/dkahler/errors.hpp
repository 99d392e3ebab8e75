#pragma once

#include <stdexcept>
#include <string>

namespace dkahler {

// Caller passed something outside an operation's contract.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine could not deliver its postcondition.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A serialized form file is malformed. what() names the first offending
// location.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace dkahler
