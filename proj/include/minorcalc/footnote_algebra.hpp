#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "minorcalc/modular_ring.hpp"

namespace minorcalc {

/**
 * The six-dimensional algebra F[x, y] / (x^3 + y^3, xy, x^4, x^3 y, x^2 y^2,
 * x y^3, y^4) over a prime field F, with basis (1, x, y, x^2, y^2, x^3).
 *
 * In this basis: xy = 0 (and every product of positive degree in both x and
 * y vanishes), y^3 = -x^3, and x^4 = y^4 = 0.
 */
class FootnoteAlgebra {
 public:
  static constexpr std::size_t kDim = 6;
  using Element = std::array<std::uint64_t, kDim>;

  enum Basis : std::size_t { kOne = 0, kX = 1, kY = 2, kX2 = 3, kY2 = 4, kX3 = 5 };

  explicit FootnoteAlgebra(std::uint64_t prime = 2);

  const PrimeField& base() const { return base_; }
  std::uint64_t characteristic() const { return base_.modulus(); }

  Element zero() const { return Element{}; }
  Element one() const { return basis(kOne); }
  Element basis(Basis b) const;
  Element x() const { return basis(kX); }
  Element y() const { return basis(kY); }

  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element from_integer(const BigInt& v) const;

  // 1 + nilpotent is a unit; c + nilpotent is a unit for c != 0.
  std::optional<Element> unit_inverse(const Element& a) const;

  // Coordinates reduced into [0, p); throws on wrong length.
  Element from_coordinates(const std::array<std::int64_t, kDim>& coords) const;

  /// "1 + x^3"; coefficients above p/2 print as negatives ("1 - x^3" over Z/3).
  std::string format(const Element& a) const;
  /// Accepts sums of basis monomials with optional integer coefficients,
  /// e.g. "x", "-y^2", "1 + 2*x^3", "0".
  Element parse(std::string_view text) const;

  std::string describe() const { return "footnote:" + std::to_string(characteristic()); }

  bool operator==(const FootnoteAlgebra&) const = default;

 private:
  PrimeField base_;
};

}  // namespace minorcalc
