#include <doctest.h>

#include <map>
#include <utility>

#include "properties.hpp"
#include "minorcalc/footnote_algebra.hpp"
#include "minorcalc/integer_ring.hpp"
#include "minorcalc/io.hpp"
#include "minorcalc/modular_ring.hpp"
#include "minorcalc/polynomial.hpp"
#include "minorcalc/series.hpp"

using namespace minorcalc;
using harness::TrialRng;

namespace {

// Footnote multiplication by a different route: multiply as polynomials in
// x, y and then reduce monomial by monomial.
std::array<std::int64_t, 6> footnote_oracle_mul(const std::array<std::int64_t, 6>& a,
                                                const std::array<std::int64_t, 6>& b,
                                                std::int64_t p) {
  static const std::pair<int, int> exps[6] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {3, 0}};
  std::map<std::pair<int, int>, std::int64_t> prod;
  for (int s = 0; s < 6; ++s) {
    for (int t = 0; t < 6; ++t) {
      prod[{exps[s].first + exps[t].first, exps[s].second + exps[t].second}] += a[s] * b[t];
    }
  }
  std::array<std::int64_t, 6> out{};
  for (const auto& [e, c] : prod) {
    const auto [i, j] = e;
    if (i > 0 && j > 0) continue;  // xy = 0
    if (i + j >= 4) continue;      // degree 4 vanishes
    if (j == 3) {                  // y^3 = -x^3
      out[5] -= c;
      continue;
    }
    for (int s = 0; s < 6; ++s) {
      if (exps[s] == e) out[s] += c;
    }
  }
  for (auto& c : out) c = ((c % p) + p) % p;
  return out;
}

}  // namespace

TEST_CASE("ring axioms over Z") {
  const auto failure =
      props::ring_axioms(IntegerRing{}, [](TrialRng& rng) { return BigInt(rng.uniform(-1000, 1000)); });
  CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("ring axioms over Z/k") {
  for (std::uint64_t k : {2ULL, 3ULL, 4ULL, 101ULL, 0xFFFFFFFFULL}) {
    const auto failure = props::ring_axioms(ModularRing(k));
    CHECK_MESSAGE(!failure, failure.value_or(""));
  }
  const auto failure = props::ring_axioms(PrimeField(101), [](TrialRng& rng) {
    return static_cast<std::uint64_t>(rng.uniform(0, 100));
  });
  CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("ring axioms over the footnote algebra") {
  for (std::uint64_t p : {2ULL, 3ULL, 7ULL}) {
    const auto failure = props::ring_axioms(FootnoteAlgebra(p));
    CHECK_MESSAGE(!failure, failure.value_or(""));
  }
}

TEST_CASE("ring axioms over Z[vars] and truncated series") {
  const auto failure = props::all_ring_axioms();
  CHECK_MESSAGE(!failure, failure.value_or(""));
  const SeriesRing<IntegerRing> sz(IntegerRing{}, 4);
  const auto series_failure =
      props::ring_axioms(sz, [](TrialRng& rng) { return gen::random_series(IntegerRing{}, 4, rng); });
  CHECK_MESSAGE(!series_failure, series_failure.value_or(""));
}

TEST_CASE("modular arithmetic") {
  const ModularRing z4(4);
  CHECK(z4.from_integer(-1) == 3);
  CHECK(z4.from_integer(BigInt("123456789012345678901234567890")) == 2);
  CHECK(z4.from_int64(-9) == 3);
  CHECK(z4.unit_inverse(3) == std::optional<std::uint64_t>(3));
  CHECK_FALSE(z4.unit_inverse(2).has_value());
  CHECK(z4.describe() == "mod:4");

  const ModularRing big(0xFFFFFFFFULL);
  CHECK(big.mul(big.from_int64(-1), big.from_int64(-1)) == 1);

  const PrimeField f101(101);
  for (std::uint64_t a = 1; a < 101; ++a) {
    const auto inv = f101.unit_inverse(a);
    REQUIRE(inv.has_value());
    CHECK(f101.mul(a, *inv) == 1);
  }
  CHECK(f101.describe() == "field:101");

  CHECK_THROWS_AS(ModularRing(1), InputError);
  CHECK_THROWS_AS(ModularRing(std::uint64_t{1} << 32), InputError);
  CHECK_THROWS_AS(PrimeField(4), InputError);
  CHECK(is_prime(2));
  CHECK(is_prime(4294967291ULL));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
}

TEST_CASE("integer ring units") {
  const IntegerRing zz;
  CHECK(zz.unit_inverse(-1) == std::optional<BigInt>(-1));
  CHECK_FALSE(zz.unit_inverse(2).has_value());
  CHECK(embed_integer(zz, BigInt(-7)) == -7);
}

TEST_CASE("embed_integer by double-and-add matches from_integer") {
  // PolynomialRing's from_integer is bypassed by going through a ring
  // without an embedding: the series ring over Z/4.
  const SeriesRing<ModularRing> s(ModularRing(4), 2);
  for (int v = -20; v <= 20; ++v) {
    const auto e = embed_integer(s, BigInt(v));
    CHECK(e.coeff(0) == static_cast<std::uint64_t>(((v % 4) + 4) % 4));
    CHECK(e.coeff(1) == 0);
  }
}

TEST_CASE("footnote relations") {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    const FootnoteAlgebra alg(p);
    const auto x = alg.x();
    const auto y = alg.y();
    CAPTURE(p);
    CHECK(is_zero(alg, alg.mul(x, y)));
    CHECK(is_zero(alg, alg.add(power(alg, x, 3), power(alg, y, 3))));
    CHECK(is_zero(alg, power(alg, x, 4)));
    CHECK(is_zero(alg, power(alg, y, 4)));
    CHECK(is_zero(alg, alg.mul(power(alg, x, 2), power(alg, y, 2))));
    CHECK(is_zero(alg, alg.mul(power(alg, x, 3), y)));
    CHECK(is_zero(alg, alg.mul(x, power(alg, y, 3))));
    CHECK_FALSE(is_zero(alg, power(alg, x, 3)));
    CHECK_FALSE(is_zero(alg, power(alg, x, 2)));
    CHECK_FALSE(is_zero(alg, power(alg, y, 2)));
    CHECK(alg.describe() == "footnote:" + std::to_string(p));
  }
}

TEST_CASE("footnote multiplication agrees with reduce-after-multiply") {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    const FootnoteAlgebra alg(p);
    for (int k = 0; k < 500; ++k) {
      TrialRng rng(5, static_cast<std::uint64_t>(k));
      std::array<std::int64_t, 6> a{};
      std::array<std::int64_t, 6> b{};
      for (auto& c : a) c = rng.uniform(0, static_cast<std::int64_t>(p) - 1);
      for (auto& c : b) c = rng.uniform(0, static_cast<std::int64_t>(p) - 1);
      const auto want = alg.from_coordinates(footnote_oracle_mul(a, b, static_cast<std::int64_t>(p)));
      CHECK(alg.equal(alg.mul(alg.from_coordinates(a), alg.from_coordinates(b)), want));
    }
  }
}

TEST_CASE("footnote units and formatting") {
  const FootnoteAlgebra f2(2);
  const FootnoteAlgebra f3(3);
  const auto one_plus_x = f3.add(f3.one(), f3.x());
  const auto inv = f3.unit_inverse(one_plus_x);
  REQUIRE(inv.has_value());
  CHECK(is_one(f3, f3.mul(one_plus_x, *inv)));
  CHECK_FALSE(f3.unit_inverse(f3.x()).has_value());

  CHECK(f2.format(f2.add(f2.one(), power(f2, f2.x(), 3))) == "1 + x^3");
  CHECK(f3.format(sub(f3, f3.one(), power(f3, f3.x(), 3))) == "1 - x^3");
  CHECK(f2.format(f2.zero()) == "0");
  CHECK(f3.format(f3.neg(f3.y())) == "-y");

  for (int k = 0; k < 200; ++k) {
    TrialRng rng(17, static_cast<std::uint64_t>(k));
    const auto a = harness::random_element(f3, rng, {});
    CHECK(f3.equal(f3.parse(f3.format(a)), a));
  }
  CHECK(f3.equal(f3.parse("1 + 2*x^3"), sub(f3, f3.one(), power(f3, f3.x(), 3))));
  CHECK_THROWS_AS(f3.parse("x^4"), InputError);
  CHECK_THROWS_AS(f3.parse("z"), InputError);
  CHECK_THROWS_AS(FootnoteAlgebra(6), InputError);
}

TEST_CASE("ring specs") {
  CHECK(RingSpec::parse("int").kind == RingSpec::Kind::kInt);
  CHECK(RingSpec::parse("mod:4") == RingSpec{RingSpec::Kind::kMod, 4});
  CHECK(RingSpec::parse("mod4") == RingSpec{RingSpec::Kind::kMod, 4});
  CHECK(RingSpec::parse("footnote") == RingSpec{RingSpec::Kind::kFootnote, 2});
  CHECK(RingSpec::parse("footnote:3").to_string() == "footnote:3");
  CHECK_THROWS_AS(RingSpec::parse("mod:1"), InputError);
  CHECK_THROWS_AS(RingSpec::parse("mod:"), InputError);
  CHECK_THROWS_AS(RingSpec::parse("footnote:4"), InputError);
  CHECK_THROWS_AS(RingSpec::parse("rational"), InputError);
  CHECK(with_ring(RingSpec::parse("mod:7"), [](const auto& r) { return r.describe(); }) == "mod:7");
}
