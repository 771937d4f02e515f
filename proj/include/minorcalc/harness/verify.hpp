#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minorcalc/harness/random.hpp"
#include "minorcalc/io.hpp"

namespace minorcalc::harness {

/// Outcome of one verification suite. Suites stop at the first failing case.
struct SuiteResult {
  std::string suite;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string first_failure;

  void fail(std::string what) {
    if (passed) first_failure = std::move(what);
    passed = false;
  }
  std::string summary() const;
};

struct SuiteOptions {
  RingSpec ring;
  int max_n = 3;
  int max_m = 4;
  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
  EntryOptions entries;
};

/// verify_symbolic for every i and every (n, m) in `grid`.
SuiteResult run_symbolic_suite(const std::vector<std::pair<int, int>>& grid);
/// Grid {1..max_n} x {0..max_m}.
SuiteResult run_symbolic_suite(int max_n, int max_m);

/// Random matrices: eval_universal at the principal minors equals the
/// diagonal of mat_pow. Each trial draws n in [1, max_n] and m in [0, max_m].
SuiteResult run_random_suite(const SuiteOptions& opt);

/// P_{n,i,m} with every p{S} set to 1 evaluates to 1.
SuiteResult run_all_ones_suite(int max_n, int max_m);

/// Off-diagonal certificates on random matrices (n in [2, max_n]) plus the
/// symbolic sign check of the adjugate expansion for every n <= max_n.
SuiteResult run_offdiag_suite(const SuiteOptions& opt);

/// B adj(B) = adj(B) B = det(B) I on random matrices, n in [0, max_n].
SuiteResult run_adjugate_suite(const SuiteOptions& opt);

/// Symbolic charpoly expansion det(B + zI) = sum_P det(sub_P^P B) z^{m-|P|}
/// and the diagonal-sum expansion of det(C + D), both for sizes <= max_n.
SuiteResult run_charpoly_suite(int max_n);

/// Symbolic diagonal-sum identity for one size n.
bool check_diagonal_sum_expansion(int n);
/// Symbolic charpoly identity for one size m.
bool check_charpoly_expansion(int m);

}  // namespace minorcalc::harness
