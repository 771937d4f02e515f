#pragma once

/**
 * @file ring.hpp
 * @brief The commutative-ring contract every algorithm in the library is
 * written against.
 *
 * A ring is a small copyable handle (it may carry runtime data such as a
 * modulus) together with an associated element type. Elements are plain
 * values; all arithmetic goes through the handle so that the same element
 * type can live in differently parametrized rings.
 */

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

#include "minorcalc/bigint.hpp"

namespace minorcalc {

template <typename R>
concept CommutativeRing =
    std::copy_constructible<R> && std::equality_comparable<R> &&
    requires(const R& ring, const typename R::Element& a,
             const typename R::Element& b) {
      typename R::Element;
      { ring.zero() } -> std::convertible_to<typename R::Element>;
      { ring.one() } -> std::convertible_to<typename R::Element>;
      { ring.add(a, b) } -> std::convertible_to<typename R::Element>;
      { ring.mul(a, b) } -> std::convertible_to<typename R::Element>;
      { ring.neg(a) } -> std::convertible_to<typename R::Element>;
      { ring.equal(a, b) } -> std::convertible_to<bool>;
      { ring.format(a) } -> std::convertible_to<std::string>;
      { ring.describe() } -> std::convertible_to<std::string>;
    };

// Rings that can invert at least some of their units.
template <typename R>
concept UnitInvertibleRing =
    CommutativeRing<R> && requires(const R& ring, const typename R::Element& a) {
      { ring.unit_inverse(a) } -> std::convertible_to<std::optional<typename R::Element>>;
    };

// Rings with a direct image of Z; everything else falls back to
// double-and-add on one().
template <typename R>
concept HasIntegerEmbedding =
    CommutativeRing<R> && requires(const R& ring, const BigInt& v) {
      { ring.from_integer(v) } -> std::convertible_to<typename R::Element>;
    };

template <CommutativeRing R>
typename R::Element sub(const R& ring, const typename R::Element& a,
                        const typename R::Element& b) {
  return ring.add(a, ring.neg(b));
}

template <CommutativeRing R>
bool is_zero(const R& ring, const typename R::Element& a) {
  return ring.equal(a, ring.zero());
}

template <CommutativeRing R>
bool is_one(const R& ring, const typename R::Element& a) {
  return ring.equal(a, ring.one());
}

/// Image of an integer under the unique ring map Z -> R.
template <CommutativeRing R>
typename R::Element embed_integer(const R& ring, const BigInt& value) {
  if constexpr (HasIntegerEmbedding<R>) {
    return ring.from_integer(value);
  } else {
    BigInt k = value < 0 ? BigInt(-value) : value;
    auto acc = ring.zero();
    auto step = ring.one();
    while (k != 0) {
      if ((k & 1) != 0) acc = ring.add(acc, step);
      k >>= 1;
      if (k != 0) step = ring.add(step, step);
    }
    return value < 0 ? ring.neg(acc) : acc;
  }
}

template <CommutativeRing R>
typename R::Element power(const R& ring, typename R::Element base,
                          std::uint64_t exponent) {
  auto result = ring.one();
  while (exponent != 0) {
    if ((exponent & 1U) != 0) result = ring.mul(result, base);
    exponent >>= 1U;
    if (exponent != 0) base = ring.mul(base, base);
  }
  return result;
}

}  // namespace minorcalc
