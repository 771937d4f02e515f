#include "minorcalc/harness/verify.hpp"

#include <map>
#include <memory>
#include <tuple>

namespace minorcalc::harness {

std::string SuiteResult::summary() const {
  std::string out = suite + ": " + (passed ? "PASS" : "FAIL") + " (" + std::to_string(cases) +
                    " cases)";
  if (!passed) out += "\n  first failure: " + first_failure;
  return out;
}

SuiteResult run_symbolic_suite(const std::vector<std::pair<int, int>>& grid) {
  SuiteResult result;
  result.suite = "symbolic";
  for (const auto& [n, m] : grid) {
    for (int i = 1; i <= n; ++i) {
      ++result.cases;
      if (!verify_symbolic(n, i, m)) {
        result.fail("P[n=" + std::to_string(n) + ",i=" + std::to_string(i) + ",m=" +
                    std::to_string(m) + "] differs from the generic power");
        return result;
      }
    }
  }
  return result;
}

SuiteResult run_symbolic_suite(int max_n, int max_m) {
  std::vector<std::pair<int, int>> grid;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 0; m <= max_m; ++m) grid.emplace_back(n, m);
  }
  return run_symbolic_suite(grid);
}

namespace {

template <CommutativeRing R>
SuiteResult random_suite(const R& ring, const SuiteOptions& opt) {
  SuiteResult result;
  result.suite = "random[" + ring.describe() + "]";
  std::map<int, std::unique_ptr<DiagonalSynthesizer>> synth;
  for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
    TrialRng rng(opt.seed, trial);
    const int n = static_cast<int>(rng.uniform(1, opt.max_n));
    const int m = static_cast<int>(rng.uniform(0, opt.max_m));
    const Matrix<R> a = random_matrix(ring, n, rng, opt.entries);
    auto& s = synth[n];
    if (!s) s = std::make_unique<DiagonalSynthesizer>(n, opt.max_m);
    const auto minors = principal_minors(a);
    const auto power = mat_pow(a, static_cast<std::uint64_t>(m));
    for (int i = 1; i <= n; ++i) {
      ++result.cases;
      const auto got = eval_universal(s->get(i, m), minors);
      if (!ring.equal(got, power(i, i))) {
        result.fail("trial " + std::to_string(trial) + ": A = " + a.to_string() + ", m = " +
                    std::to_string(m) + ", i = " + std::to_string(i) + ": polynomial gives " +
                    ring.format(got) + ", A^m has " + ring.format(power(i, i)));
        return result;
      }
    }
  }
  return result;
}

template <CommutativeRing R>
SuiteResult offdiag_suite(const R& ring, const SuiteOptions& opt) {
  SuiteResult result;
  result.suite = "offdiag[" + ring.describe() + "]";
  for (int n = 2; n <= opt.max_n; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        ++result.cases;
        if (!verify_offdiag_expansion(n, i, j)) {
          result.fail("adjugate expansion sign check fails for n = " + std::to_string(n) +
                      ", (i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")");
          return result;
        }
      }
    }
  }
  if (opt.max_n < 2) return result;
  std::map<std::tuple<int, int, int, int>, OffDiagCertificate> certs;
  for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
    TrialRng rng(opt.seed, trial);
    const int n = static_cast<int>(rng.uniform(2, opt.max_n));
    const int m = static_cast<int>(rng.uniform(0, opt.max_m));
    const Matrix<R> a = random_matrix(ring, n, rng, opt.entries);
    const auto power = mat_pow(a, static_cast<std::uint64_t>(m));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        ++result.cases;
        const auto key = std::make_tuple(n, i, j, m);
        auto it = certs.find(key);
        if (it == certs.end()) it = certs.emplace(key, synth_offdiag(n, i, j, m)).first;
        const auto got = eval_certificate(it->second, a);
        if (!ring.equal(got, power(i, j))) {
          result.fail("trial " + std::to_string(trial) + ": A = " + a.to_string() + ", m = " +
                      std::to_string(m) + ", (i,j) = (" + std::to_string(i) + "," +
                      std::to_string(j) + "): certificate gives " + ring.format(got) +
                      ", A^m has " + ring.format(power(i, j)));
          return result;
        }
      }
    }
  }
  return result;
}

template <CommutativeRing R>
SuiteResult adjugate_suite(const R& ring, const SuiteOptions& opt) {
  SuiteResult result;
  result.suite = "adjugate[" + ring.describe() + "]";
  for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
    TrialRng rng(opt.seed, trial);
    const int n = static_cast<int>(rng.uniform(0, opt.max_n));
    const Matrix<R> b = random_matrix(ring, n, rng, opt.entries);
    const auto adj = adjugate(b);
    const auto scalar = mat_scale(det(b), Matrix<R>::identity(ring, n));
    ++result.cases;
    if (!(mat_mul(b, adj) == scalar) || !(mat_mul(adj, b) == scalar)) {
      result.fail("trial " + std::to_string(trial) + ": B = " + b.to_string());
      return result;
    }
  }
  return result;
}

}  // namespace

SuiteResult run_random_suite(const SuiteOptions& opt) {
  return with_ring(opt.ring, [&](const auto& ring) { return random_suite(ring, opt); });
}

SuiteResult run_offdiag_suite(const SuiteOptions& opt) {
  return with_ring(opt.ring, [&](const auto& ring) { return offdiag_suite(ring, opt); });
}

SuiteResult run_adjugate_suite(const SuiteOptions& opt) {
  return with_ring(opt.ring, [&](const auto& ring) { return adjugate_suite(ring, opt); });
}

SuiteResult run_all_ones_suite(int max_n, int max_m) {
  SuiteResult result;
  result.suite = "all-ones";
  const IntegerRing zz;
  for (int n = 1; n <= max_n; ++n) {
    const DiagonalSynthesizer synth(n, max_m);
    for (int m = 0; m <= max_m; ++m) {
      for (int i = 1; i <= n; ++i) {
        ++result.cases;
        const auto value = poly_eval(synth.get(i, m).body, zz,
                                     [](Variable) -> std::optional<BigInt> { return BigInt(1); });
        if (value != 1) {
          result.fail("P[n=" + std::to_string(n) + ",i=" + std::to_string(i) + ",m=" +
                      std::to_string(m) + "] at all-ones is " + value.str());
          return result;
        }
      }
    }
  }
  return result;
}

bool check_charpoly_expansion(int m) {
  const PolynomialRing zx;
  const auto b = generic_matrix(m);
  const Polynomial z = Polynomial::variable(Variable::named("z"));
  const auto shifted = mat_add(b, mat_scale(z, Matrix<PolynomialRing>::identity(zx, m)));
  const Polynomial lhs = det(shifted);
  const auto minors = principal_minors(b);
  Polynomial rhs;
  for (const auto& p : canonical_subsets(m)) {
    rhs += minors.at(p) * z.pow(static_cast<std::uint32_t>(m - p.size()));
  }
  return lhs == rhs;
}

bool check_diagonal_sum_expansion(int n) {
  const PolynomialRing zx;
  const auto c = generic_matrix(n);
  Matrix<PolynomialRing> d(zx, n, n);
  std::vector<Polynomial> diag;
  for (int k = 1; k <= n; ++k) {
    diag.push_back(Polynomial::variable(Variable::named("d" + std::to_string(k))));
    d(k, k) = diag.back();
  }
  const Polynomial lhs = det(mat_add(c, d));
  const auto minors = principal_minors(c);
  Polynomial rhs;
  for (const auto& p : canonical_subsets(n)) {
    Polynomial term = minors.at(p);
    for (int k = 1; k <= n; ++k) {
      if (!p.contains(k)) term *= diag[static_cast<std::size_t>(k - 1)];
    }
    rhs += term;
  }
  return lhs == rhs;
}

SuiteResult run_charpoly_suite(int max_n) {
  SuiteResult result;
  result.suite = "charpoly";
  for (int m = 0; m <= max_n; ++m) {
    ++result.cases;
    if (!check_charpoly_expansion(m)) {
      result.fail("charpoly expansion fails for m = " + std::to_string(m));
      return result;
    }
    ++result.cases;
    if (!check_diagonal_sum_expansion(m)) {
      result.fail("diagonal-sum expansion fails for n = " + std::to_string(m));
      return result;
    }
  }
  return result;
}

}  // namespace minorcalc::harness
