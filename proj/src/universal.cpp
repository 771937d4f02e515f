#include "minorcalc/universal.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

namespace minorcalc {

namespace {

void check_n(int n) {
  if (n < 1 || n > SubsetIndex::kMaxAmbient) {
    throw InputError("n = " + std::to_string(n) + " outside [1, " +
                     std::to_string(SubsetIndex::kMaxAmbient) + "]");
  }
}

void check_index(int n, int i, const char* what) {
  if (i < 1 || i > n) {
    throw InputError(std::string(what) + " = " + std::to_string(i) + " outside [1, " +
                     std::to_string(n) + "]");
  }
}

void check_power(int m) {
  if (m < 0) throw InputError("power m = " + std::to_string(m) + " is negative");
}

Polynomial signed_sum(const std::vector<Polynomial>& parts, bool negative) {
  Polynomial sum;
  for (const auto& p : parts) sum += p;
  return negative ? -sum : sum;
}

}  // namespace

std::string UniversalPolynomial::header() const {
  return "P[n=" + std::to_string(n) + ",i=" + std::to_string(i) + ",m=" + std::to_string(m) + "]";
}

std::string UniversalPolynomial::serialize() const {
  return header() + "\n" + body.to_string() + "\n";
}

UniversalPolynomial UniversalPolynomial::deserialize(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header_line;
  std::string body_line;
  std::getline(in, header_line);
  std::getline(in, body_line);
  static const std::regex kHeader(R"(\s*P\[n=(\d+),i=(\d+),m=(\d+)\]\s*)");
  std::smatch match;
  if (!std::regex_match(header_line, match, kHeader)) {
    throw InputError("bad universal polynomial header '" + header_line + "'");
  }
  UniversalPolynomial u;
  u.n = std::stoi(match[1]);
  u.i = std::stoi(match[2]);
  u.m = std::stoi(match[3]);
  u.body = Polynomial::parse(body_line);
  return u;
}

Matrix<PolynomialRing> generic_matrix(int n) {
  if (n < 0) throw InputError("negative matrix size");
  Matrix<PolynomialRing> x(PolynomialRing{}, n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) x(i, j) = Polynomial::variable(Variable::entry(i, j));
  }
  return x;
}

Polynomial principal_symbol(const SubsetIndex& subset) {
  if (subset.is_empty()) return Polynomial(1);
  return Polynomial::variable(Variable::principal(subset));
}

PolySeries det_series(int n, std::size_t order) {
  check_n(n);
  std::vector<std::vector<Polynomial>> by_size(static_cast<std::size_t>(n) + 1);
  for (const auto& s : canonical_subsets(n)) {
    by_size[static_cast<std::size_t>(s.size())].push_back(principal_symbol(s));
  }
  PolySeries d(PolynomialRing{}, order);
  for (std::size_t k = 0; k <= order && k <= static_cast<std::size_t>(n); ++k) {
    d.set_coeff(k, signed_sum(by_size[k], k % 2 == 1));
  }
  return d;
}

PolySeries adj_diag_series(int n, int i, std::size_t order) {
  check_n(n);
  check_index(n, i, "i");
  std::vector<std::vector<Polynomial>> by_size(static_cast<std::size_t>(n));
  for (const auto& s : canonical_subsets(n - 1)) {
    by_size[static_cast<std::size_t>(s.size())].push_back(principal_symbol(diag_reindex(s, i)));
  }
  PolySeries a(PolynomialRing{}, order);
  for (std::size_t k = 0; k <= order && k < static_cast<std::size_t>(n); ++k) {
    a.set_coeff(k, signed_sum(by_size[k], k % 2 == 1));
  }
  return a;
}

PolySeries adj_offdiag_series(int n, int i, int j, std::size_t order) {
  check_n(n);
  check_index(n, i, "i");
  check_index(n, j, "j");
  if (i == j) throw InputError("off-diagonal series needs i != j");
  PolySeries a(PolynomialRing{}, order);
  for (const auto& p : canonical_subsets(n)) {
    if (!p.contains(i) || !p.contains(j)) continue;
    const auto power = static_cast<std::size_t>(p.size() - 1);
    if (power > order) continue;
    const int laplace = p.rank_of(i) + p.rank_of(j);
    const bool negative = ((laplace + p.size() - 1) % 2) != 0;
    Polynomial q = Polynomial::variable(Variable::quasi(p.without(j), p.without(i)));
    a.set_coeff(power, a.coeff(power) + (negative ? -q : q));
  }
  return a;
}

UniversalPolynomial synth_diag(int n, int i, int m) {
  check_n(n);
  check_index(n, i, "i");
  check_power(m);
  const auto order = static_cast<std::size_t>(m);
  const PolySeries inverse = series_inverse(det_series(n, order));
  const PolySeries adj = adj_diag_series(n, i, order);
  return {n, i, m, product_coefficient(inverse, adj, order)};
}

DiagonalSynthesizer::DiagonalSynthesizer(int n, int max_m)
    : n_(n),
      max_m_(max_m),
      inverse_det_(PolynomialRing{}, 0) {
  check_n(n);
  check_power(max_m);
  const auto order = static_cast<std::size_t>(max_m);
  inverse_det_ = series_inverse(det_series(n, order));
  for (int i = 1; i <= n; ++i) adj_diag_.push_back(adj_diag_series(n, i, order));
}

UniversalPolynomial DiagonalSynthesizer::get(int i, int m) const {
  check_index(n_, i, "i");
  if (m < 0 || m > max_m_) {
    throw InputError("m = " + std::to_string(m) + " outside [0, " + std::to_string(max_m_) + "]");
  }
  // Coefficients below the truncation order do not depend on it.
  return {n_, i, m,
          product_coefficient(inverse_det_, adj_diag_[static_cast<std::size_t>(i - 1)],
                              static_cast<std::size_t>(m))};
}

bool verify_symbolic(const UniversalPolynomial& u) {
  const auto x = generic_matrix(u.n);
  const auto minors = principal_minors(x);
  const Polynomial lhs = eval_universal(u, minors);
  const Polynomial rhs = mat_pow(x, static_cast<std::uint64_t>(u.m))(u.i, u.i);
  return lhs == rhs;
}

bool verify_symbolic(int n, int i, int m) { return verify_symbolic(synth_diag(n, i, m)); }

OffDiagCertificate synth_offdiag(int n, int i, int j, int m) {
  check_n(n);
  check_index(n, i, "i");
  check_index(n, j, "j");
  if (i == j) throw InputError("i = j: use synth_diag for diagonal entries");
  check_power(m);
  OffDiagCertificate cert{n, i, j, m, {}};
  if (m == 0) return cert;

  const auto order = static_cast<std::size_t>(m);
  const PolySeries inverse = series_inverse(det_series(n, order));
  const PolySeries adj = adj_offdiag_series(n, i, j, order);
  const Polynomial entry = product_coefficient(inverse, adj, order);

  // Every term carries exactly one q-symbol to the first power.
  std::map<Variable, std::vector<Polynomial::Term>> grouped;
  for (const auto& term : entry.terms()) {
    std::optional<Variable> symbol;
    for (const auto& [v, e] : term.monomial.factors()) {
      if (v.kind() != Variable::Kind::kQuasi) continue;
      if (symbol || e != 1) throw std::logic_error("term is not linear in the q-symbols");
      symbol = v;
    }
    if (!symbol) throw std::logic_error("term without a q-symbol");
    grouped[*symbol].push_back({term.monomial.without(*symbol), term.coeff});
  }
  for (auto& [symbol, terms] : grouped) {
    Polynomial coeff = Polynomial::from_terms(std::move(terms));
    if (coeff.is_zero()) continue;
    cert.terms.push_back({std::move(coeff), SubsetIndex(n, symbol.rows_mask()),
                          SubsetIndex(n, symbol.cols_mask())});
  }
  return cert;
}

bool verify_offdiag_expansion(int n, int i, int j) {
  const auto order = static_cast<std::size_t>(n);
  const PolySeries expansion = adj_offdiag_series(n, i, j, order);

  const auto x = generic_matrix(n);
  MinorCache<PolynomialRing> cache(x);
  PolySeries expanded(PolynomialRing{}, order);
  for (std::size_t k = 0; k <= order; ++k) {
    expanded.set_coeff(k, poly_eval(expansion.coeff(k), PolynomialRing{},
                                    [&](Variable v) -> std::optional<Polynomial> {
                                      if (v.kind() != Variable::Kind::kQuasi) return std::nullopt;
                                      return cache.minor(SubsetIndex(n, v.rows_mask()),
                                                         SubsetIndex(n, v.cols_mask()));
                                    }));
  }

  const SeriesRing<PolynomialRing> series(PolynomialRing{}, order);
  Matrix<SeriesRing<PolynomialRing>> b(series, n, n);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      PolySeries entry(PolynomialRing{}, order);
      if (r == c) entry.set_coeff(0, Polynomial(1));
      if (order >= 1) entry.set_coeff(1, -x(r, c));
      b(r, c) = std::move(entry);
    }
  }
  PolySeries adj_entry = det(remove_row_col(b, j, i));
  if ((i + j) % 2 != 0) adj_entry = series_neg(adj_entry);
  return adj_entry == expanded;
}

}  // namespace minorcalc
