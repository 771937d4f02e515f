#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "minorcalc/bigint.hpp"

namespace minorcalc {

/**
 * Z/nZ with residues stored canonically in [0, n).
 *
 * The modulus is limited to 32 bits so that products of residues fit in a
 * 64-bit word before reduction.
 */
class ModularRing {
 public:
  using Element = std::uint64_t;

  explicit ModularRing(std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1 % modulus_; }
  Element add(Element a, Element b) const {
    const Element s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  Element mul(Element a, Element b) const { return (a * b) % modulus_; }
  Element neg(Element a) const { return a == 0 ? 0 : modulus_ - a; }
  bool equal(Element a, Element b) const { return a == b; }

  Element from_integer(const BigInt& v) const;
  Element from_int64(std::int64_t v) const;

  // Inverse when gcd(a, n) = 1.
  std::optional<Element> unit_inverse(Element a) const;

  std::string format(Element a) const { return std::to_string(a); }
  std::string describe() const { return "mod:" + std::to_string(modulus_); }

  bool operator==(const ModularRing&) const = default;

 private:
  std::uint64_t modulus_;
};

/// Z/p for prime p; every nonzero element is a unit.
class PrimeField : public ModularRing {
 public:
  explicit PrimeField(std::uint64_t prime);

  std::string describe() const { return "field:" + std::to_string(modulus()); }

  bool operator==(const PrimeField&) const = default;
};

bool is_prime(std::uint64_t n);

}  // namespace minorcalc
