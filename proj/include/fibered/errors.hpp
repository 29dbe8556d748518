#pragma once

#include <stdexcept>
#include <string>

namespace fibered {

/// Malformed user input: bad tables, bad generators, bad fiber specs.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A group or fiber exceeds a configured size limit.
class SizeLimitError : public std::length_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::length_error(what) {}
};

/// An internal identity failed. Always an implementation bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fibered
