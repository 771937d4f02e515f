#pragma once

#include <stdexcept>
#include <string>

namespace minorcalc {

// Malformed or out-of-range input: bad indices, mismatched shapes, parse
// failures. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A mathematically undefined request, e.g. inverting a series whose constant
// term is not a unit.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace minorcalc
