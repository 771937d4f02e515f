#include <doctest.h>

#include <algorithm>

#include "minorcalc/determinant.hpp"
#include "minorcalc/harness/random.hpp"
#include "minorcalc/integer_ring.hpp"
#include "oracles.hpp"

using namespace minorcalc;

TEST_CASE("canonical subset order") {
  std::string listed;
  for (const auto& s : canonical_subsets(3)) listed += s.to_string() + " ";
  CHECK(listed == "{} {1} {2} {3} {1,2} {1,3} {2,3} {1,2,3} ");
  for (int n = 0; n <= 8; ++n) {
    const auto all = canonical_subsets(n);
    CHECK(all.size() == (std::size_t{1} << n));
    for (std::size_t k = 1; k < all.size(); ++k) {
      CHECK(canonical_less(all[k - 1].mask(), all[k].mask()));
      CHECK_FALSE(canonical_less(all[k].mask(), all[k - 1].mask()));
    }
  }
}

TEST_CASE("subset basics") {
  const SubsetIndex s(5, {1, 3, 4});
  CHECK(s.to_string() == "{1,3,4}");
  CHECK(s.join() == "1,3,4");
  CHECK(s.size() == 3);
  CHECK(s.rank_of(3) == 2);
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(2));
  CHECK(s.with(2) == SubsetIndex(5, {1, 2, 3, 4}));
  CHECK(s.without(1) == SubsetIndex(5, {3, 4}));
  CHECK(s.complement() == SubsetIndex(5, {2, 5}));
  CHECK(SubsetIndex::full(4).mask() == 0xFU);
  CHECK(SubsetIndex::empty(4).to_string() == "{}");
  CHECK(s.elements() == std::vector<int>{1, 3, 4});
  CHECK_THROWS_AS(SubsetIndex(3, {4}), InputError);
  CHECK_THROWS_AS(SubsetIndex(3, {0}), InputError);
  CHECK_THROWS_AS(SubsetIndex(17, 0U), InputError);
  CHECK_THROWS_AS(s.rank_of(2), InputError);
}

TEST_CASE("diagonal reindexing matches the minors it names") {
  const IntegerRing zz;
  for (int n = 1; n <= 5; ++n) {
    harness::TrialRng rng(21, static_cast<std::uint64_t>(n));
    const auto a = harness::random_matrix(zz, n, rng);
    const auto rows = oracle::rows_of(a);
    for (int i = 1; i <= n; ++i) {
      const auto reduced = remove_row_col(a, i, i);
      for (const auto& p : canonical_subsets(n - 1)) {
        const auto q = diag_reindex(p, i);
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(p.to_string());
        CHECK(q.ambient() == n);
        CHECK(q.size() == p.size());
        CHECK_FALSE(q.contains(i));
        // Expected image, written out directly.
        std::vector<int> want;
        for (int e : p.elements()) want.push_back(e < i ? e : e + 1);
        CHECK(q.elements() == want);
        CHECK(det(submatrix(reduced, p, p)) ==
              oracle::leibniz_minor(zz, rows, q.elements(), q.elements()));
      }
    }
  }
}
