#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "minorcalc/bigint.hpp"
#include "minorcalc/subset.hpp"

namespace minorcalc::harness {

/**
 * The pair
 *   C = [[a,b,1,1],[c,d,1,1],[1,1,p,q],[1,1,r,s]]
 *   D = [[a,b,1,1],[c,d,1,1],[1,1,p,r],[1,1,q,s]]
 * has equal principal minors, while the {2,3} minors of C^2 and D^2 differ
 * unless (q - r)(b - c) = 0.
 */
struct ExampleCdReport {
  bool symbolic = false;
  std::string values;  // numeric mode: "a=1 b=2 ..."
  bool minors_equal = false;
  std::string c2_minor;
  std::string d2_minor;
  bool squares_differ = false;
  std::string factor;  // (q - r)(b - c), as a value or a polynomial
  bool factor_nonzero = false;
  // Symbolic mode only.
  std::string difference;         // C^2 minor - D^2 minor
  bool difference_is_factor = false;  // difference = (q - r)(b - c)
  bool coincide_if_q_eq_r = false;
  bool coincide_if_b_eq_c = false;

  /// The minors agree, and the squares differ exactly when the factor is nonzero.
  bool reproduced() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

ExampleCdReport example_cd_symbolic();
/// values = (a, b, c, d, p, q, r, s).
ExampleCdReport example_cd_numeric(const std::array<BigInt, 8>& values);

/// The 4x4 matrix A = [[1,1,0,0],[0,1,y,x],[x,0,1,y],[y,0,x,1]] over the
/// footnote algebra with base Z/p.
struct CounterexampleReport {
  std::uint64_t prime = 2;
  std::string matrix;
  std::vector<std::pair<SubsetIndex, std::string>> minors;  // canonical order
  bool all_minors_one = false;
  std::string square_minor;  // {2,3} minor of A^2
  std::string expected;      // 1 - x^3 - xy evaluated in the ring
  bool matches_expected = false;
  bool differs_from_one = false;

  bool reproduced() const { return all_minors_one && matches_expected && differs_from_one; }
  std::string to_text() const;
  nlohmann::json to_json() const;
};

CounterexampleReport counterexample(std::uint64_t prime = 2);

}  // namespace minorcalc::harness
