#include <doctest.h>

#include <map>

#include "minorcalc/harness/random.hpp"
#include "minorcalc/harness/verify.hpp"
#include "minorcalc/io.hpp"
#include "minorcalc/universal.hpp"
#include "oracles.hpp"

using namespace minorcalc;
using harness::TrialRng;

namespace {

// Term-by-term evaluation of f with p{S} -> the Leibniz minor of `rows` at S.
template <CommutativeRing R>
typename R::Element oracle_eval(const R& ring, const Polynomial& f, const oracle::Rows<R>& rows) {
  const int n = static_cast<int>(rows.size());
  auto total = ring.zero();
  for (const auto& t : f.terms()) {
    auto term = embed_integer(ring, t.coeff);
    for (const auto& [v, e] : t.monomial.factors()) {
      REQUIRE(v.kind() == Variable::Kind::kPrincipal);
      const auto s = oracle::elements_of(v.subset_mask(), n);
      const auto minor = oracle::leibniz_minor(ring, rows, s, s);
      for (std::uint32_t k = 0; k < e; ++k) term = ring.mul(term, minor);
    }
    total = ring.add(total, term);
  }
  return total;
}

// p{i}^2 + sum_{j != i} (p{i} p{j} - p{i,j}), built directly.
Polynomial closed_form_m2(int n, int i) {
  const auto p = [n](std::initializer_list<int> s) { return principal_symbol(SubsetIndex(n, s)); };
  Polynomial f = p({i}) * p({i});
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    f += p({i}) * p({j}) - p({std::min(i, j), std::max(i, j)});
  }
  return f;
}

template <CommutativeRing R>
void check_random_against_oracle(const R& ring, int trials) {
  std::map<std::pair<int, int>, std::vector<UniversalPolynomial>> cache;
  for (int k = 0; k < trials; ++k) {
    TrialRng rng(41, static_cast<std::uint64_t>(k));
    const int n = static_cast<int>(rng.uniform(1, 4));
    const int m = static_cast<int>(rng.uniform(0, 5));
    const auto a = harness::random_matrix(ring, n, rng);
    const auto rows = oracle::rows_of(a);
    const auto power = oracle::naive_pow(ring, rows, m);
    auto& polys = cache[{n, m}];
    if (polys.empty()) {
      for (int i = 1; i <= n; ++i) polys.push_back(synth_diag(n, i, m));
    }
    for (int i = 1; i <= n; ++i) {
      const auto& want = power[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)];
      CAPTURE(a.to_string());
      CAPTURE(m);
      CAPTURE(i);
      CHECK(ring.equal(oracle_eval(ring, polys[static_cast<std::size_t>(i - 1)].body, rows), want));
      CHECK(ring.equal(eval_universal(polys[static_cast<std::size_t>(i - 1)], principal_minors(a)), want));
    }
  }
}

}  // namespace

TEST_CASE("golden diagonal polynomials") {
  CHECK(synth_diag(2, 1, 2).body.to_string() == "p{1}^2 + p{1}*p{2} - p{1,2}");
  CHECK(synth_diag(3, 1, 0).body.to_string() == "1");
  CHECK(synth_diag(3, 2, 1).body.to_string() == "p{2}");
  CHECK(synth_diag(1, 1, 5).body.to_string() == "p{1}^5");
  CHECK(synth_diag(2, 1, 2).header() == "P[n=2,i=1,m=2]");
}

TEST_CASE("m = 2 closed form") {
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      CHECK(synth_diag(n, i, 2).body.to_string() == closed_form_m2(n, i).to_string());
    }
  }
}

TEST_CASE("generic matrix identity, against permutation minors and naive powers") {
  const PolynomialRing zx;
  const std::vector<std::pair<int, int>> grid = {{1, 4}, {2, 4}, {3, 4}, {4, 2}};
  for (const auto& [n, max_m] : grid) {
    const auto rows = oracle::rows_of(generic_matrix(n));
    for (int m = 0; m <= max_m; ++m) {
      const auto power = oracle::naive_pow(zx, rows, m);
      for (int i = 1; i <= n; ++i) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(i);
        const auto u = synth_diag(n, i, m);
        CHECK(oracle_eval(zx, u.body, rows) ==
              power[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)]);
        CHECK(verify_symbolic(n, i, m));
      }
    }
  }
}

TEST_CASE("verify_symbolic rejects a wrong polynomial") {
  auto u = synth_diag(3, 2, 3);
  CHECK(verify_symbolic(u));
  u.body += Polynomial(1);
  CHECK_FALSE(verify_symbolic(u));
  auto v = synth_diag(2, 1, 2);
  v.body = Polynomial::parse("p{1}^2 + p{1}*p{2} + p{1,2}");
  CHECK_FALSE(verify_symbolic(v));
}

TEST_CASE("random substitution against oracles") {
  check_random_against_oracle(IntegerRing{}, 150);
  check_random_against_oracle(ModularRing(2), 150);
  check_random_against_oracle(ModularRing(4), 150);
  check_random_against_oracle(ModularRing(101), 150);
  check_random_against_oracle(FootnoteAlgebra(2), 60);
}

TEST_CASE("reduction mod 4 commutes with evaluation") {
  const IntegerRing zz;
  const ModularRing z4(4);
  for (int k = 0; k < 100; ++k) {
    TrialRng rng(42, static_cast<std::uint64_t>(k));
    const int n = static_cast<int>(rng.uniform(1, 4));
    const int m = static_cast<int>(rng.uniform(0, 5));
    const auto a = harness::random_matrix(zz, n, rng);
    const auto a4 = map_entries(a, z4, [&](const BigInt& v) { return z4.from_integer(v); });
    for (int i = 1; i <= n; ++i) {
      const auto u = synth_diag(n, i, m);
      CHECK(z4.from_integer(eval_universal(u, principal_minors(a))) ==
            eval_universal(u, principal_minors(a4)));
    }
  }
}

TEST_CASE("batch synthesizer agrees with synth_diag") {
  for (int n = 1; n <= 3; ++n) {
    const DiagonalSynthesizer batch(n, 5);
    for (int m = 0; m <= 5; ++m) {
      for (int i = 1; i <= n; ++i) CHECK(batch.get(i, m) == synth_diag(n, i, m));
    }
    CHECK_THROWS_AS(batch.get(1, 6), InputError);
  }
}

TEST_CASE("all-ones collapse") {
  const auto r = harness::run_all_ones_suite(4, 6);
  CHECK_MESSAGE(r.passed, r.summary());
  // A unipotent matrix has every principal minor 1 and ones on the diagonal
  // of every power.
  const IntegerRing zz;
  const Matrix<IntegerRing> a(zz, {{BigInt(1), BigInt(5)}, {BigInt(0), BigInt(1)}});
  for (int m = 0; m <= 8; ++m) {
    CHECK(eval_universal(synth_diag(2, 1, m), principal_minors(a)) == 1);
  }
}

TEST_CASE("serialization") {
  const auto u = synth_diag(3, 2, 3);
  const auto text = u.serialize();
  CHECK(text.rfind("P[n=3,i=2,m=3]\n", 0) == 0);
  CHECK(UniversalPolynomial::deserialize(text) == u);
  CHECK_THROWS_AS(UniversalPolynomial::deserialize("P[n=3,i=2]\n1\n"), InputError);
  CHECK_THROWS_AS(UniversalPolynomial::deserialize("p{1}\n"), InputError);
}

TEST_CASE("index validation") {
  CHECK_THROWS_AS(synth_diag(3, 0, 2), InputError);
  CHECK_THROWS_AS(synth_diag(3, 4, 2), InputError);
  CHECK_THROWS_AS(synth_diag(3, 1, -1), InputError);
  CHECK_THROWS_AS(synth_diag(0, 1, 1), InputError);
  CHECK_THROWS_AS(synth_offdiag(3, 2, 2, 2), InputError);
  const IntegerRing zz;
  CHECK_THROWS_AS(eval_universal(synth_diag(3, 1, 2), principal_minors(Matrix<IntegerRing>::identity(zz, 2))),
                  InputError);
}

TEST_CASE("golden off-diagonal certificate") {
  const auto c = synth_offdiag(2, 1, 2, 2);
  REQUIRE(c.terms.size() == 1);
  CHECK(c.terms[0].coeff.to_string() == "p{1} + p{2}");
  CHECK(c.terms[0].rows == SubsetIndex(2, {1}));
  CHECK(c.terms[0].cols == SubsetIndex(2, {2}));
  CHECK(synth_offdiag(3, 1, 2, 0).terms.empty());
  const auto j = certificate_to_json(c);
  CHECK(j.dump() == R"({"i":1,"j":2,"m":2,"n":2,"terms":[{"I":[1],"J":[2],"coeff":"p{1} + p{2}"}]})");
  CHECK(certificate_from_json(j) == c);
  auto bad = j;
  bad["terms"][0]["J"] = {1};
  CHECK_THROWS_AS(certificate_from_json(bad), InputError);
}

TEST_CASE("off-diagonal certificates against naive powers") {
  const IntegerRing zz;
  const ModularRing z4(4);
  std::map<std::tuple<int, int, int, int>, OffDiagCertificate> certs;
  auto cert = [&](int n, int i, int j, int m) -> const OffDiagCertificate& {
    auto key = std::make_tuple(n, i, j, m);
    auto it = certs.find(key);
    if (it == certs.end()) it = certs.emplace(key, synth_offdiag(n, i, j, m)).first;
    return it->second;
  };
  for (int k = 0; k < 100; ++k) {
    TrialRng rng(43, static_cast<std::uint64_t>(k));
    const int n = static_cast<int>(rng.uniform(2, 4));
    const int m = static_cast<int>(rng.uniform(0, 4));
    const auto a = harness::random_matrix(zz, n, rng);
    const auto a4 = harness::random_matrix(z4, n, rng);
    const auto pz = oracle::naive_pow(zz, oracle::rows_of(a), m);
    const auto p4 = oracle::naive_pow(z4, oracle::rows_of(a4), m);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const auto& c = cert(n, i, j, m);
        for (const auto& t : c.terms) CHECK_NOTHROW(check_quasiprincipal(t.rows, t.cols, i, j));
        CHECK(eval_certificate(c, a) == pz[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
        CHECK(eval_certificate(c, a4) == p4[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
      }
    }
  }
}

TEST_CASE("off-diagonal expansion sign") {
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i != j) CHECK(verify_offdiag_expansion(n, i, j));
      }
    }
  }
}
