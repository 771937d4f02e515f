#pragma once

/**
 * @file universal.hpp
 * @brief Universal polynomials for the entries of matrix powers in terms of
 * principal (and quasiprincipal) minors.
 *
 * For B = I_n - tA over R[[t]], the t^m coefficient of (B^{-1})_{i,j} is
 * (A^m)_{i,j}, and B^{-1} = adj(B) / det(B). Both det(B) and the diagonal
 * adjugate entries expand into principal minors of A:
 *
 *   det B          = sum_{P ⊆ [n]}   (-t)^{|P|} p{P}
 *   (adj B)_{i,i}  = sum_{P ⊆ [n-1]} (-t)^{|P|} p{P'}      (P' = diag_reindex(P, i))
 *
 * so the t^m coefficient of (1 / det B) * (adj B)_{i,i}, computed with p{S}
 * as free symbols, is an integer polynomial P_{n,i,m} that gives (A^m)_{i,i}
 * for every matrix over every commutative ring. The off-diagonal adjugate
 * entry expands into quasiprincipal symbols q{I|J} instead; see
 * adj_offdiag_series().
 *
 * The synthesized polynomial is not the unique such polynomial (principal
 * minors satisfy relations); it is the one this construction produces, in
 * canonical form.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minorcalc/determinant.hpp"
#include "minorcalc/matrix.hpp"
#include "minorcalc/polynomial.hpp"
#include "minorcalc/series.hpp"

namespace minorcalc {

using PolySeries = TruncatedSeries<PolynomialRing>;

struct UniversalPolynomial {
  int n = 0;
  int i = 0;
  int m = 0;
  Polynomial body;

  std::string header() const;
  /// Header line "P[n=?,i=?,m=?]" followed by the canonical body line.
  std::string serialize() const;
  static UniversalPolynomial deserialize(std::string_view text);

  bool operator==(const UniversalPolynomial&) const = default;
};

struct CertificateTerm {
  Polynomial coeff;  // in the p{S} symbols
  SubsetIndex rows;  // I
  SubsetIndex cols;  // J

  bool operator==(const CertificateTerm&) const = default;
};

/// Witness that (A^m)_{i,j} = sum over terms of coeff(minors of A) * det(sub_I^J A).
struct OffDiagCertificate {
  int n = 0;
  int i = 0;
  int j = 0;
  int m = 0;
  std::vector<CertificateTerm> terms;

  bool operator==(const OffDiagCertificate&) const = default;
};

/// The n x n matrix of independent indeterminates x{i,j}.
Matrix<PolynomialRing> generic_matrix(int n);

/// p{S} as a polynomial; p{} is the constant 1.
Polynomial principal_symbol(const SubsetIndex& subset);

/// det(I_n - tA) in the symbols p{P}, truncated at `order`.
PolySeries det_series(int n, std::size_t order);

/// (adj(I_n - tA))_{i,i} in the symbols p{P}, truncated at `order`.
PolySeries adj_diag_series(int n, int i, std::size_t order);

/**
 * (adj(I_n - tA))_{i,j} for i != j, in the symbols q{I|J}:
 *
 *   sum_{P ⊆ [n], i,j ∈ P} e(P) (-1)^{|P|-1} t^{|P|-1} q{P\{j} | P\{i}}
 *
 * with e(P) = (-1)^{rank_P(i) + rank_P(j)} the Laplace sign of the row that
 * replaces row j by the i-th unit vector.
 */
PolySeries adj_offdiag_series(int n, int i, int j, std::size_t order);

UniversalPolynomial synth_diag(int n, int i, int m);

/**
 * Synthesizes P_{n,i,m} for every i in [n] and m <= max_m from one inverse of
 * det(I - tA). Results equal those of synth_diag.
 */
class DiagonalSynthesizer {
 public:
  DiagonalSynthesizer(int n, int max_m);

  int n() const { return n_; }
  int max_m() const { return max_m_; }
  UniversalPolynomial get(int i, int m) const;

 private:
  int n_;
  int max_m_;
  PolySeries inverse_det_;
  std::vector<PolySeries> adj_diag_;
};

/// Exact check that P_{n,i,m} evaluated at the principal minors of the
/// generic matrix equals ((generic A)^m)_{i,i} in Z[x].
bool verify_symbolic(int n, int i, int m);
bool verify_symbolic(const UniversalPolynomial& u);

OffDiagCertificate synth_offdiag(int n, int i, int j, int m);

/// Symbolic check of adj_offdiag_series against the adjugate definition:
/// with q{I|J} expanded into minors of the generic matrix, the series equals
/// (-1)^{i+j} det((I - tX) with row j and column i removed).
bool verify_offdiag_expansion(int n, int i, int j);

/// The n of a MinorTable must match; p{S} maps to the minor at S.
template <CommutativeRing R>
typename R::Element eval_at_minors(const Polynomial& f, const MinorTable<R>& table) {
  const auto limit = std::uint32_t{1} << table.n();
  return poly_eval(f, table.ring(), [&](Variable v) -> std::optional<typename R::Element> {
    if (v.kind() != Variable::Kind::kPrincipal) return std::nullopt;
    const auto mask = v.subset_mask();
    if (mask >= limit) return std::nullopt;
    return table.at_mask(mask);
  });
}

template <CommutativeRing R>
typename R::Element eval_universal(const UniversalPolynomial& u, const MinorTable<R>& table) {
  if (table.n() != u.n) {
    throw InputError("minor table over [" + std::to_string(table.n()) +
                     "] used with P[n=" + std::to_string(u.n) + "]");
  }
  return eval_at_minors(u.body, table);
}

template <CommutativeRing R>
typename R::Element eval_certificate(const OffDiagCertificate& c, const Matrix<R>& a) {
  if (!a.is_square() || a.rows() != c.n) {
    throw InputError("certificate for n = " + std::to_string(c.n) + " applied to a " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
  }
  const R& ring = a.ring();
  auto total = ring.zero();
  if (c.terms.empty()) return total;
  const MinorTable<R> table = principal_minors(a);
  MinorCache<R> cache(a);
  for (const auto& term : c.terms) {
    check_quasiprincipal(term.rows, term.cols, c.i, c.j);
    const auto& q = cache.minor(term.rows, term.cols);
    if (is_zero(ring, q)) continue;
    total = ring.add(total, ring.mul(eval_at_minors(term.coeff, table), q));
  }
  return total;
}

}  // namespace minorcalc
