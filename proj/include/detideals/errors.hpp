#pragma once

#include <stdexcept>
#include <string>

namespace detideals {

// Input outside an operation's domain (bad shape, odd parts, lambda <= 0, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A hard invariant failed at run time. Indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// An enumeration exceeded its configured resource guard.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace detideals
