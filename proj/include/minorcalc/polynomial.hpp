#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials with arbitrary-precision integer
 * coefficients.
 *
 * A polynomial is kept in canonical form at all times: no zero coefficients,
 * each monomial's factors sorted by variable with positive exponents, and
 * terms sorted in descending graded-lexicographic order. Two polynomials are
 * therefore equal exactly when their term vectors are equal, and printing is
 * deterministic.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minorcalc/bigint.hpp"
#include "minorcalc/errors.hpp"
#include "minorcalc/ring.hpp"
#include "minorcalc/variable.hpp"

namespace minorcalc {

class Monomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Variable v, std::uint32_t exponent = 1);
  // Sorts, merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(Variable v) const;
  Monomial without(Variable v) const;

  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial&) const = default;

  std::size_t hash() const noexcept;

 private:
  std::vector<Factor> factors_;
  std::uint64_t degree_ = 0;
};

/// Graded lexicographic order: total degree first, then the exponent of the
/// smallest variable is the most significant.
bool grlex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    BigInt coeff;
    bool operator==(const Term&) const = default;
  };

  Polynomial() = default;
  Polynomial(BigInt constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(BigInt(constant)) {}  // NOLINT
  static Polynomial variable(Variable v);
  static Polynomial monomial(Monomial m, BigInt coeff = 1);
  static Polynomial from_terms(std::vector<Term> terms);

  // Terms in descending grlex order.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigInt constant_term() const;
  std::uint64_t total_degree() const;

  std::vector<Variable> variables() const;
  std::uint32_t degree_in(Variable v) const;
  // Sum of the terms divisible by exactly v^k, with v^k removed.
  Polynomial coefficient_of(Variable v, std::uint32_t k) const;

  Polynomial scaled(const BigInt& factor) const;
  Polynomial pow(std::uint32_t exponent) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);
  bool operator==(const Polynomial&) const = default;

  /// Canonical text, e.g. "p{1}^2 + p{1}*p{2} - p{1,2}"; zero prints as "0".
  std::string to_string() const;
  /// Inverse of to_string; accepts any term order and arbitrary whitespace.
  static Polynomial parse(std::string_view text);

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool negate_b);
  std::vector<Term> terms_;
};

/// Z[variables] as a ring handle.
struct PolynomialRing {
  using Element = Polynomial;

  Element zero() const { return {}; }
  Element one() const { return Polynomial(1); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element from_integer(const BigInt& v) const { return Polynomial(v); }
  std::optional<Element> unit_inverse(const Element& a) const {
    if (a.is_constant() && (a.constant_term() == 1 || a.constant_term() == -1)) return a;
    return std::nullopt;
  }
  std::string format(const Element& a) const { return a.to_string(); }
  std::string describe() const { return "poly"; }

  bool operator==(const PolynomialRing&) const = default;
};

/**
 * Image of f under the unique ring map Z[vars] -> R extending
 * `lookup` : Variable -> R. `lookup` returns std::nullopt for a variable it
 * does not assign, which is an input error if that variable occurs in f.
 */
template <CommutativeRing R, typename Lookup>
  requires std::is_invocable_r_v<std::optional<typename R::Element>, Lookup, Variable>
typename R::Element poly_eval(const Polynomial& f, const R& ring, Lookup&& lookup) {
  using E = typename R::Element;
  std::unordered_map<Variable, E> values;
  auto value_of = [&](Variable v) -> const E& {
    auto it = values.find(v);
    if (it != values.end()) return it->second;
    std::optional<E> assigned = lookup(v);
    if (!assigned) throw InputError("variable " + v.to_string() + " is not assigned");
    return values.emplace(v, std::move(*assigned)).first->second;
  };

  E total = ring.zero();
  for (const auto& term : f.terms()) {
    E product = ring.one();
    bool have_product = false;
    for (const auto& [v, e] : term.monomial.factors()) {
      E factor = power(ring, value_of(v), e);
      product = have_product ? ring.mul(product, factor) : std::move(factor);
      have_product = true;
    }
    if (term.coeff == 1) {
      total = ring.add(total, product);
    } else if (term.coeff == -1) {
      total = sub(ring, total, product);
    } else {
      total = ring.add(total, ring.mul(embed_integer(ring, term.coeff), product));
    }
  }
  return total;
}

template <CommutativeRing R>
typename R::Element poly_eval(const Polynomial& f, const R& ring,
                              const std::map<Variable, typename R::Element>& assignment) {
  return poly_eval(f, ring, [&](Variable v) -> std::optional<typename R::Element> {
    auto it = assignment.find(v);
    if (it == assignment.end()) return std::nullopt;
    return it->second;
  });
}

}  // namespace minorcalc
