#pragma once

// Random elements for property tests.

#include <bit>
#include <vector>

#include "minorcalc/harness/random.hpp"
#include "minorcalc/polynomial.hpp"
#include "minorcalc/series.hpp"

namespace gen {

using minorcalc::harness::TrialRng;

inline minorcalc::Variable random_variable(TrialRng& rng, int n = 3) {
  using minorcalc::SubsetIndex;
  using minorcalc::Variable;
  const auto mask = [&] { return static_cast<std::uint32_t>(rng.uniform(1, (1 << n) - 1)); };
  switch (rng.uniform(0, 3)) {
    case 0:
      return Variable::principal(SubsetIndex(n, mask()));
    case 1: {
      const auto rows = mask();
      auto cols = mask();
      while (std::popcount(cols) != std::popcount(rows)) cols = mask();
      return Variable::quasi(SubsetIndex(n, rows), SubsetIndex(n, cols));
    }
    case 2:
      return Variable::entry(static_cast<int>(rng.uniform(1, n)), static_cast<int>(rng.uniform(1, n)));
    default: {
      static const char* const names[] = {"a", "b", "z", "t", "d1", "x"};
      return Variable::named(names[rng.uniform(0, 5)]);
    }
  }
}

inline minorcalc::Polynomial random_polynomial(TrialRng& rng, int max_terms = 4, int n = 3) {
  using minorcalc::Monomial;
  using minorcalc::Polynomial;
  Polynomial f;
  const auto terms = rng.uniform(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> factors;
    const auto vars = rng.uniform(0, 3);
    for (int k = 0; k < vars; ++k) {
      factors.emplace_back(random_variable(rng, n), static_cast<std::uint32_t>(rng.uniform(1, 3)));
    }
    f += Polynomial::monomial(Monomial::from_factors(std::move(factors)), rng.uniform(-20, 20));
  }
  return f;
}

template <minorcalc::CommutativeRing R>
minorcalc::TruncatedSeries<R> random_series(const R& ring, std::size_t order, TrialRng& rng) {
  minorcalc::TruncatedSeries<R> s(ring, order);
  for (std::size_t k = 0; k <= order; ++k) {
    s.set_coeff(k, minorcalc::harness::random_element(ring, rng, {}));
  }
  return s;
}

}  // namespace gen
