#pragma once

/**
 * @file determinant.hpp
 * @brief Division-free determinants and minor enumeration.
 *
 * Minors are computed by Laplace expansion along the first selected row,
 * memoized on the (row set, column set) pair. Only ring addition and
 * multiplication are used, so the results are valid over every commutative
 * ring, including ones with zero divisors such as Z/4.
 */

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "minorcalc/errors.hpp"
#include "minorcalc/matrix.hpp"
#include "minorcalc/ring.hpp"
#include "minorcalc/subset.hpp"

namespace minorcalc {

/**
 * Memo table of minors det(sub_I^J B) for one matrix.
 *
 * Owned by a single caller; never shared across threads. Principal minors,
 * quasiprincipal minors, the determinant and the adjugate all reuse the
 * same subproblems when computed from one cache.
 */
template <CommutativeRing R>
class MinorCache {
 public:
  using Element = typename R::Element;

  explicit MinorCache(const Matrix<R>& b) : matrix_(b) {
    if (b.rows() > SubsetIndex::kMaxAmbient || b.cols() > SubsetIndex::kMaxAmbient) {
      throw InputError("minor cache supports at most 16 rows and columns");
    }
  }

  const Matrix<R>& matrix() const { return matrix_; }

  /// det(sub_I^J B); |I| must equal |J|.
  const Element& minor(const SubsetIndex& rows, const SubsetIndex& cols) {
    if (rows.ambient() != matrix_.rows() || cols.ambient() != matrix_.cols()) {
      throw InputError("index sets do not match the matrix shape");
    }
    if (rows.size() != cols.size()) {
      throw InputError("minor needs |I| = |J|, got " + rows.to_string() + " and " +
                       cols.to_string());
    }
    return minor_masks(rows.mask(), cols.mask());
  }

  std::size_t cached() const { return memo_.size(); }

 private:
  const Element& minor_masks(std::uint32_t rows, std::uint32_t cols) {
    const std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const R& ring = matrix_.ring();
    Element value = ring.zero();
    if (rows == 0) {
      value = ring.one();
    } else {
      // Expand along the first selected row.
      const int r = std::countr_zero(rows) + 1;
      const std::uint32_t rest_rows = rows & (rows - 1);
      int position = 0;
      for (std::uint32_t m = cols; m != 0; m &= m - 1, ++position) {
        const int c = std::countr_zero(m) + 1;
        const auto& entry = matrix_(r, c);
        if (is_zero(ring, entry)) continue;
        const std::uint32_t rest_cols = cols & ~(1U << (c - 1));
        const Element& rest = minor_masks(rest_rows, rest_cols);
        if (is_zero(ring, rest)) continue;
        Element term = ring.mul(entry, rest);
        value = (position % 2 == 0) ? ring.add(value, term) : sub(ring, value, term);
      }
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

  const Matrix<R>& matrix_;
  std::unordered_map<std::uint64_t, Element> memo_;
};

template <CommutativeRing R>
typename R::Element det(const Matrix<R>& b) {
  if (!b.is_square()) {
    throw InputError("determinant of a non-square " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()) + " matrix");
  }
  if (b.rows() == 0) return b.ring().one();
  MinorCache<R> cache(b);
  const auto all = SubsetIndex::full(b.rows());
  return cache.minor(all, all);
}

/// (adj B)_{i,j} = (-1)^{i+j} det(B with row j and column i removed).
template <CommutativeRing R>
Matrix<R> adjugate(const Matrix<R>& b) {
  if (!b.is_square()) throw InputError("adjugate of a non-square matrix");
  const int n = b.rows();
  const R& ring = b.ring();
  Matrix<R> out(ring, n, n);
  if (n == 0) return out;
  MinorCache<R> cache(b);
  const auto all = SubsetIndex::full(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto& m = cache.minor(all.without(j), all.without(i));
      out(i, j) = ((i + j) % 2 == 0) ? m : ring.neg(m);
    }
  }
  return out;
}

/**
 * All 2^n principal minors of an n x n matrix, indexed by subset.
 * The entry at the empty set is 1.
 */
template <CommutativeRing R>
class MinorTable {
 public:
  using Element = typename R::Element;

  MinorTable(R ring, int n, std::vector<Element> by_mask)
      : ring_(std::move(ring)), n_(n), values_(std::move(by_mask)) {
    if (values_.size() != (std::size_t{1} << n)) {
      throw InputError("minor table for n = " + std::to_string(n) + " needs 2^n entries");
    }
  }

  const R& ring() const { return ring_; }
  int n() const { return n_; }

  const Element& at(const SubsetIndex& s) const {
    if (s.ambient() != n_) {
      throw InputError("subset over [" + std::to_string(s.ambient()) + "] used with a table over [" +
                       std::to_string(n_) + "]");
    }
    return values_[s.mask()];
  }
  const Element& at_mask(std::uint32_t mask) const { return values_.at(mask); }

  bool operator==(const MinorTable& other) const {
    if (n_ != other.n_ || !(ring_ == other.ring_)) return false;
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (!ring_.equal(values_[k], other.values_[k])) return false;
    }
    return true;
  }

  // True when every principal minor (including the empty one) equals 1.
  bool all_one() const {
    for (const auto& v : values_) {
      if (!is_one(ring_, v)) return false;
    }
    return true;
  }

 private:
  R ring_;
  int n_;
  std::vector<Element> values_;
};

template <CommutativeRing R>
MinorTable<R> principal_minors(const Matrix<R>& a) {
  if (!a.is_square()) throw InputError("principal minors of a non-square matrix");
  const int n = a.rows();
  if (n > SubsetIndex::kMaxAmbient) throw InputError("principal minors limited to n <= 16");
  std::vector<typename R::Element> values;
  values.reserve(std::size_t{1} << n);
  MinorCache<R> cache(a);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const SubsetIndex s(n, mask);
    values.push_back(cache.minor(s, s));
  }
  return MinorTable<R>(a.ring(), n, std::move(values));
}

/**
 * Checks that (I, J) is an (i, j)-quasiprincipal index pair:
 * i != j, i in I, j in J, |I| = |J| and J = (I \ {i}) u {j}.
 * Throws InputError naming the first failed clause.
 */
void check_quasiprincipal(const SubsetIndex& rows, const SubsetIndex& cols, int i, int j);

template <CommutativeRing R>
typename R::Element quasiprincipal_minor(const Matrix<R>& a, const SubsetIndex& rows,
                                         const SubsetIndex& cols, int i, int j) {
  if (!a.is_square()) throw InputError("quasiprincipal minor of a non-square matrix");
  if (rows.ambient() != a.rows() || cols.ambient() != a.rows()) {
    throw InputError("index sets do not match the matrix size");
  }
  check_quasiprincipal(rows, cols, i, j);
  MinorCache<R> cache(a);
  return cache.minor(rows, cols);
}

}  // namespace minorcalc
