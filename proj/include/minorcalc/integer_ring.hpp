#pragma once

#include <optional>
#include <string>

#include "minorcalc/bigint.hpp"

namespace minorcalc {

/// The ring Z of arbitrary-precision integers.
struct IntegerRing {
  using Element = BigInt;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element from_integer(const BigInt& v) const { return v; }

  std::optional<Element> unit_inverse(const Element& a) const {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
  }

  std::string format(const Element& a) const { return a.str(); }
  std::string describe() const { return "int"; }

  bool operator==(const IntegerRing&) const = default;
};

}  // namespace minorcalc
