#pragma once

/**
 * @file series.hpp
 * @brief Power series in t over a commutative ring, truncated modulo t^(N+1).
 *
 * The truncation order is fixed at construction. Every operation is exact
 * modulo t^(N+1) and never looks at coefficients beyond index N.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "minorcalc/errors.hpp"
#include "minorcalc/ring.hpp"

namespace minorcalc {

template <CommutativeRing R>
class TruncatedSeries {
 public:
  using Element = typename R::Element;

  TruncatedSeries(R ring, std::size_t order)
      : ring_(std::move(ring)), coeffs_(order + 1, ring_.zero()) {}

  // Coefficients c_0, c_1, ...; missing ones are zero, extra ones an error.
  TruncatedSeries(R ring, std::size_t order, std::vector<Element> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > order + 1) {
      throw InputError("series has " + std::to_string(coeffs_.size()) +
                       " coefficients but truncation order " + std::to_string(order));
    }
    coeffs_.resize(order + 1, ring_.zero());
  }

  static TruncatedSeries constant(R ring, std::size_t order, Element c) {
    return TruncatedSeries(std::move(ring), order, std::vector<Element>{std::move(c)});
  }

  // The series t (which is 0 when order = 0).
  static TruncatedSeries t(R ring, std::size_t order) {
    TruncatedSeries s(ring, order);
    if (order >= 1) s.coeffs_[1] = ring.one();
    return s;
  }

  const R& ring() const { return ring_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const Element& coeff(std::size_t k) const { return coeffs_.at(k); }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  void set_coeff(std::size_t k, Element value) { coeffs_.at(k) = std::move(value); }

  bool operator==(const TruncatedSeries& other) const {
    if (!(ring_ == other.ring_) || order() != other.order()) return false;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (!ring_.equal(coeffs_[k], other.coeffs_[k])) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (is_zero(ring_, coeffs_[k])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + ring_.format(coeffs_[k]) + ")";
      if (k >= 1) out += "*t";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return (out.empty() ? "0" : out) + " + O(t^" + std::to_string(order() + 1) + ")";
  }

 private:
  R ring_;
  std::vector<Element> coeffs_;
};

namespace detail {

template <CommutativeRing R>
void check_compatible(const TruncatedSeries<R>& s, const TruncatedSeries<R>& u) {
  if (!(s.ring() == u.ring())) {
    throw InputError("series over different rings: " + s.ring().describe() + " vs " +
                     u.ring().describe());
  }
  if (s.order() != u.order()) {
    throw InputError("series truncation orders differ: " + std::to_string(s.order()) +
                     " vs " + std::to_string(u.order()));
  }
}

}  // namespace detail

template <CommutativeRing R>
TruncatedSeries<R> series_add(const TruncatedSeries<R>& s, const TruncatedSeries<R>& u) {
  detail::check_compatible(s, u);
  TruncatedSeries<R> out(s.ring(), s.order());
  for (std::size_t k = 0; k <= s.order(); ++k) {
    out.set_coeff(k, s.ring().add(s.coeff(k), u.coeff(k)));
  }
  return out;
}

template <CommutativeRing R>
TruncatedSeries<R> series_neg(const TruncatedSeries<R>& s) {
  TruncatedSeries<R> out(s.ring(), s.order());
  for (std::size_t k = 0; k <= s.order(); ++k) out.set_coeff(k, s.ring().neg(s.coeff(k)));
  return out;
}

/// Coefficient of t^k in s*u, without forming the rest of the product.
template <CommutativeRing R>
typename R::Element product_coefficient(const TruncatedSeries<R>& s,
                                        const TruncatedSeries<R>& u, std::size_t k) {
  detail::check_compatible(s, u);
  if (k > s.order()) throw InputError("coefficient index beyond truncation order");
  const R& ring = s.ring();
  auto acc = ring.zero();
  for (std::size_t a = 0; a <= k; ++a) {
    if (is_zero(ring, s.coeff(a)) || is_zero(ring, u.coeff(k - a))) continue;
    acc = ring.add(acc, ring.mul(s.coeff(a), u.coeff(k - a)));
  }
  return acc;
}

/// Cauchy product truncated at the common order.
template <CommutativeRing R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& s, const TruncatedSeries<R>& u) {
  detail::check_compatible(s, u);
  TruncatedSeries<R> out(s.ring(), s.order());
  for (std::size_t k = 0; k <= s.order(); ++k) out.set_coeff(k, product_coefficient(s, u, k));
  return out;
}

/**
 * Multiplicative inverse, by the recurrence
 *   b_0 = c_0^{-1},  b_k = -c_0^{-1} * sum_{j=1..k} c_j b_{k-j}.
 * The constant term must be a unit the ring can invert.
 */
template <CommutativeRing R>
TruncatedSeries<R> series_inverse(const TruncatedSeries<R>& s) {
  const R& ring = s.ring();
  const auto& c0 = s.coeff(0);
  typename R::Element c0_inv = ring.one();
  if (!is_one(ring, c0)) {
    if constexpr (UnitInvertibleRing<R>) {
      auto inv = ring.unit_inverse(c0);
      if (!inv) {
        throw DomainError("series constant term " + ring.format(c0) + " is not a unit");
      }
      c0_inv = std::move(*inv);
    } else {
      throw DomainError("series constant term " + ring.format(c0) +
                        " is not invertible in " + ring.describe());
    }
  }
  const bool monic = is_one(ring, c0_inv);
  TruncatedSeries<R> out(ring, s.order());
  out.set_coeff(0, c0_inv);
  for (std::size_t k = 1; k <= s.order(); ++k) {
    auto acc = ring.zero();
    for (std::size_t j = 1; j <= k; ++j) {
      if (is_zero(ring, s.coeff(j)) || is_zero(ring, out.coeff(k - j))) continue;
      acc = ring.add(acc, ring.mul(s.coeff(j), out.coeff(k - j)));
    }
    acc = ring.neg(acc);
    out.set_coeff(k, monic ? std::move(acc) : ring.mul(c0_inv, acc));
  }
  return out;
}

/// R[[t]] / (t^(N+1)) as a ring handle, so matrices over series work.
template <CommutativeRing R>
class SeriesRing {
 public:
  using Element = TruncatedSeries<R>;

  SeriesRing(R base, std::size_t order) : base_(std::move(base)), order_(order) {}

  const R& base() const { return base_; }
  std::size_t order() const { return order_; }

  Element zero() const { return Element(base_, order_); }
  Element one() const { return Element::constant(base_, order_, base_.one()); }
  Element t() const { return Element::t(base_, order_); }
  Element constant(typename R::Element c) const {
    return Element::constant(base_, order_, std::move(c));
  }
  Element add(const Element& a, const Element& b) const { return series_add(a, b); }
  Element mul(const Element& a, const Element& b) const { return series_mul(a, b); }
  Element neg(const Element& a) const { return series_neg(a); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string format(const Element& a) const { return a.to_string(); }
  std::string describe() const {
    return base_.describe() + "[[t]]/t^" + std::to_string(order_ + 1);
  }

  bool operator==(const SeriesRing&) const = default;

 private:
  R base_;
  std::size_t order_;
};

}  // namespace minorcalc
