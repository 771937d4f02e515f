#include <doctest.h>

#include "minorcalc/determinant.hpp"
#include "minorcalc/harness/random.hpp"
#include "minorcalc/harness/verify.hpp"
#include "minorcalc/io.hpp"
#include "minorcalc/universal.hpp"
#include "oracles.hpp"

using namespace minorcalc;
using harness::TrialRng;

namespace {

template <CommutativeRing R>
void check_det_against_leibniz(const R& ring, int max_n, int trials) {
  for (int k = 0; k < trials; ++k) {
    TrialRng rng(31, static_cast<std::uint64_t>(k));
    const int n = static_cast<int>(rng.uniform(0, max_n));
    const auto a = harness::random_matrix(ring, n, rng);
    CAPTURE(a.to_string());
    CHECK(ring.equal(det(a), oracle::leibniz_det(ring, oracle::rows_of(a))));
  }
}

template <CommutativeRing R>
void check_power_against_naive(const R& ring, int max_n, int max_m, int trials) {
  for (int k = 0; k < trials; ++k) {
    TrialRng rng(32, static_cast<std::uint64_t>(k));
    const int n = static_cast<int>(rng.uniform(1, max_n));
    const int m = static_cast<int>(rng.uniform(0, max_m));
    const auto a = harness::random_matrix(ring, n, rng);
    CAPTURE(a.to_string());
    CAPTURE(m);
    CHECK(oracle::rows_of(mat_pow(a, static_cast<std::uint64_t>(m))) ==
          oracle::naive_pow(ring, oracle::rows_of(a), m));
  }
}

template <CommutativeRing R>
void check_minor_table(const R& ring, int max_n, int trials) {
  for (int k = 0; k < trials; ++k) {
    TrialRng rng(33, static_cast<std::uint64_t>(k));
    const int n = static_cast<int>(rng.uniform(0, max_n));
    const auto a = harness::random_matrix(ring, n, rng);
    const auto rows = oracle::rows_of(a);
    const auto table = principal_minors(a);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      const auto e = oracle::elements_of(mask, n);
      CHECK(ring.equal(table.at_mask(mask), oracle::leibniz_minor(ring, rows, e, e)));
    }
  }
}

}  // namespace

TEST_CASE("determinant agrees with the permutation expansion") {
  check_det_against_leibniz(IntegerRing{}, 6, 300);
  check_det_against_leibniz(ModularRing(2), 6, 300);
  check_det_against_leibniz(ModularRing(4), 6, 300);
  check_det_against_leibniz(ModularRing(101), 6, 300);
  check_det_against_leibniz(FootnoteAlgebra(2), 5, 200);
  check_det_against_leibniz(FootnoteAlgebra(3), 5, 200);
}

TEST_CASE("determinant of the generic matrix") {
  const PolynomialRing zx;
  for (int n = 0; n <= 4; ++n) {
    const auto b = generic_matrix(n);
    CHECK(det(b) == oracle::leibniz_det(zx, oracle::rows_of(b)));
  }
  CHECK(det(generic_matrix(2)).to_string() == "x{1,1}*x{2,2} - x{1,2}*x{2,1}");
}

TEST_CASE("small determinants") {
  const IntegerRing zz;
  CHECK(det(Matrix<IntegerRing>(zz, 0, 0)) == 1);
  CHECK(det(Matrix<IntegerRing>(zz, {{BigInt(1), BigInt(2)}, {BigInt(3), BigInt(4)}})) == -2);
  CHECK_THROWS_AS(det(Matrix<IntegerRing>(zz, 2, 3)), InputError);
  // Large entries stay exact.
  const BigInt big("1000000000000000000000");
  CHECK(det(Matrix<IntegerRing>(zz, {{big, BigInt(1)}, {BigInt(1), big}})) == big * big - 1);
}

TEST_CASE("matrix powers agree with repeated multiplication") {
  check_power_against_naive(IntegerRing{}, 5, 7, 200);
  check_power_against_naive(ModularRing(4), 5, 9, 200);
  check_power_against_naive(FootnoteAlgebra(2), 4, 6, 100);
}

TEST_CASE("matrix operations") {
  const IntegerRing zz;
  const Matrix<IntegerRing> a(zz, {{BigInt(1), BigInt(2)}, {BigInt(3), BigInt(4)}});
  CHECK(mat_pow(a, 0) == Matrix<IntegerRing>::identity(zz, 2));
  CHECK(mat_pow(a, 2).to_string() == "[[7, 10], [15, 22]]");
  CHECK(transpose(a).to_string() == "[[1, 3], [2, 4]]");
  CHECK(mat_scale(BigInt(2), a).to_string() == "[[2, 4], [6, 8]]");
  CHECK(mat_add(a, a) == mat_scale(BigInt(2), a));
  CHECK(remove_row_col(a, 1, 2).to_string() == "[[3]]");
  CHECK(a.at(2, 1) == 3);
  CHECK_THROWS_AS(a.at(3, 1), InputError);
  CHECK_THROWS_AS(mat_mul(a, Matrix<IntegerRing>(zz, 3, 3)), InputError);
  CHECK_THROWS_AS(mat_mul(Matrix<ModularRing>(ModularRing(4), 2, 2),
                          Matrix<ModularRing>(ModularRing(5), 2, 2)),
                  InputError);
  CHECK_THROWS_AS(Matrix<IntegerRing>(zz, {{BigInt(1)}, {BigInt(1), BigInt(2)}}), InputError);
}

TEST_CASE("principal minors") {
  const IntegerRing zz;
  const Matrix<IntegerRing> a(zz, {{BigInt(1), BigInt(2)}, {BigInt(3), BigInt(4)}});
  CHECK(format_minor_table(principal_minors(a)) == "p{} = 1\np{1} = 1\np{2} = 4\np{1,2} = -2\n");
  CHECK(principal_minors(Matrix<IntegerRing>::identity(zz, 3)).all_one());
  CHECK_FALSE(principal_minors(a).all_one());
  check_minor_table(IntegerRing{}, 5, 100);
  check_minor_table(ModularRing(4), 5, 100);
  check_minor_table(FootnoteAlgebra(2), 4, 50);
}

TEST_CASE("quasiprincipal minors") {
  const IntegerRing zz;
  TrialRng rng(34, 0);
  const auto a = harness::random_matrix(zz, 4, rng);
  const auto rows = oracle::rows_of(a);
  const SubsetIndex i_set(4, {1, 3});
  const SubsetIndex j_set(4, {2, 3});
  CHECK(quasiprincipal_minor(a, i_set, j_set, 1, 2) == oracle::leibniz_minor(zz, rows, {1, 3}, {2, 3}));
  CHECK_THROWS_WITH_AS(check_quasiprincipal(SubsetIndex(4, {3}), SubsetIndex(4, {2}), 1, 2),
                       doctest::Contains("i in I"), InputError);
  CHECK_THROWS_WITH_AS(check_quasiprincipal(SubsetIndex(4, {1}), SubsetIndex(4, {3}), 1, 2),
                       doctest::Contains("j in J"), InputError);
  CHECK_THROWS_WITH_AS(check_quasiprincipal(SubsetIndex(4, {1, 3}), SubsetIndex(4, {2, 4}), 1, 2),
                       doctest::Contains("J = (I"), InputError);
  CHECK_THROWS_AS(check_quasiprincipal(SubsetIndex(4, {1}), SubsetIndex(4, {1}), 1, 1), InputError);
  MinorCache<IntegerRing> cache(a);
  CHECK_THROWS_AS(cache.minor(SubsetIndex(4, {1}), SubsetIndex(4, {1, 2})), InputError);
}

TEST_CASE("adjugate") {
  const IntegerRing zz;
  for (int k = 0; k < 100; ++k) {
    TrialRng rng(35, static_cast<std::uint64_t>(k));
    const int n = static_cast<int>(rng.uniform(1, 5));
    const auto b = harness::random_matrix(zz, n, rng);
    const auto rows = oracle::rows_of(b);
    const auto adj = adjugate(b);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        std::vector<int> r;
        std::vector<int> c;
        for (int t = 1; t <= n; ++t) {
          if (t != j) r.push_back(t);
          if (t != i) c.push_back(t);
        }
        const BigInt cof = oracle::leibniz_minor(zz, rows, r, c);
        CHECK(adj(i, j) == ((i + j) % 2 == 0 ? cof : BigInt(-cof)));
      }
    }
  }
  for (const char* ring : {"int", "mod:4", "footnote:2"}) {
    harness::SuiteOptions opt;
    opt.ring = RingSpec::parse(ring);
    opt.max_n = 5;
    opt.trials = 100;
    const auto r = harness::run_adjugate_suite(opt);
    CHECK_MESSAGE(r.passed, r.summary());
  }
  CHECK(adjugate(Matrix<IntegerRing>(zz, 0, 0)).rows() == 0);
}

TEST_CASE("charpoly and diagonal-sum expansions") {
  for (int m = 0; m <= 4; ++m) CHECK(harness::check_charpoly_expansion(m));
  for (int n = 0; n <= 3; ++n) CHECK(harness::check_diagonal_sum_expansion(n));

  // Numeric spot check of the charpoly expansion with the permutation oracle.
  const IntegerRing zz;
  for (int k = 0; k < 50; ++k) {
    TrialRng rng(36, static_cast<std::uint64_t>(k));
    const int n = static_cast<int>(rng.uniform(1, 5));
    const auto b = harness::random_matrix(zz, n, rng);
    const BigInt z = rng.uniform(-5, 5);
    auto shifted = oracle::rows_of(b);
    for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += z;
    const auto table = principal_minors(b);
    BigInt rhs = 0;
    for (const auto& p : canonical_subsets(n)) {
      BigInt zp = 1;
      for (int t = 0; t < n - p.size(); ++t) zp *= z;
      rhs += table.at(p) * zp;
    }
    CHECK(oracle::leibniz_det(zz, shifted) == rhs);
  }
}
