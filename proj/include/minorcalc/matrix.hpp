#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over a commutative ring.
 *
 * Indexing is 1-based in the public interface: at(i, j) is B_{i,j} with
 * 1 <= i <= rows(), 1 <= j <= cols(). Storage is row-major.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minorcalc/errors.hpp"
#include "minorcalc/ring.hpp"
#include "minorcalc/subset.hpp"

namespace minorcalc {

template <CommutativeRing R>
class Matrix {
 public:
  using Element = typename R::Element;

  Matrix(R ring, int rows, int cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                    ring_.zero());
  }

  Matrix(R ring, const std::vector<std::vector<Element>>& rows)
      : Matrix(ring, static_cast<int>(rows.size()),
               rows.empty() ? 0 : static_cast<int>(rows.front().size())) {
    for (int i = 0; i < rows_; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (static_cast<int>(row.size()) != cols_) throw InputError("ragged matrix rows");
      for (int j = 0; j < cols_; ++j) (*this)(i + 1, j + 1) = row[static_cast<std::size_t>(j)];
    }
  }

  static Matrix identity(const R& ring, int n) {
    Matrix m(ring, n, n);
    for (int i = 1; i <= n; ++i) m(i, i) = ring.one();
    return m;
  }

  const R& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  // Checked 1-based access.
  const Element& at(int i, int j) const {
    check_index(i, j);
    return (*this)(i, j);
  }
  Element& at(int i, int j) {
    check_index(i, j);
    return (*this)(i, j);
  }

  // Unchecked 1-based access.
  const Element& operator()(int i, int j) const { return entries_[offset(i, j)]; }
  Element& operator()(int i, int j) { return entries_[offset(i, j)]; }

  bool operator==(const Matrix& other) const {
    if (!(ring_ == other.ring_) || rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (!ring_.equal(entries_[k], other.entries_[k])) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out = "[";
    for (int i = 1; i <= rows_; ++i) {
      out += i == 1 ? "[" : ", [";
      for (int j = 1; j <= cols_; ++j) {
        if (j > 1) out += ", ";
        out += ring_.format((*this)(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  std::size_t offset(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j - 1);
  }
  void check_index(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
      throw InputError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") outside a " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                       " matrix");
    }
  }

  R ring_;
  int rows_;
  int cols_;
  std::vector<Element> entries_;
};

/// Applies f entrywise, producing a matrix over `target`.
template <CommutativeRing R, CommutativeRing S, typename F>
Matrix<S> map_entries(const Matrix<R>& a, const S& target, F&& f) {
  Matrix<S> out(target, a.rows(), a.cols());
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= a.cols(); ++j) out(i, j) = f(a(i, j));
  }
  return out;
}

template <CommutativeRing R>
Matrix<R> mat_add(const Matrix<R>& a, const Matrix<R>& b) {
  if (!(a.ring() == b.ring())) throw InputError("matrices over different rings");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix shapes differ");
  Matrix<R> out(a.ring(), a.rows(), a.cols());
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= a.cols(); ++j) out(i, j) = a.ring().add(a(i, j), b(i, j));
  }
  return out;
}

template <CommutativeRing R>
Matrix<R> mat_scale(const typename R::Element& c, const Matrix<R>& a) {
  return map_entries(a, a.ring(), [&](const auto& e) { return a.ring().mul(c, e); });
}

template <CommutativeRing R>
Matrix<R> mat_mul(const Matrix<R>& a, const Matrix<R>& b) {
  if (!(a.ring() == b.ring())) {
    throw InputError("matrices over different rings: " + a.ring().describe() + " vs " +
                     b.ring().describe());
  }
  if (a.cols() != b.rows()) {
    throw InputError("inner dimensions differ: " + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()));
  }
  const R& ring = a.ring();
  Matrix<R> out(ring, a.rows(), b.cols());
  for (int i = 1; i <= a.rows(); ++i) {
    for (int k = 1; k <= a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (is_zero(ring, aik)) continue;
      for (int j = 1; j <= b.cols(); ++j) {
        if (is_zero(ring, b(k, j))) continue;
        out(i, j) = ring.add(out(i, j), ring.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

/// A^m by repeated squaring; A^0 = I.
template <CommutativeRing R>
Matrix<R> mat_pow(const Matrix<R>& a, std::uint64_t m) {
  if (!a.is_square()) throw InputError("matrix power of a non-square matrix");
  Matrix<R> result = Matrix<R>::identity(a.ring(), a.rows());
  if (m == 0) return result;
  Matrix<R> base = a;
  bool first = true;
  while (m != 0) {
    if ((m & 1U) != 0) {
      result = first ? base : mat_mul(result, base);
      first = false;
    }
    m >>= 1U;
    if (m != 0) base = mat_mul(base, base);
  }
  return result;
}

/// sub_I^J B: rows I and columns J, both in increasing order.
template <CommutativeRing R>
Matrix<R> submatrix(const Matrix<R>& b, const SubsetIndex& rows, const SubsetIndex& cols) {
  if (rows.ambient() != b.rows() || cols.ambient() != b.cols()) {
    throw InputError("index sets over [" + std::to_string(rows.ambient()) + "] x [" +
                     std::to_string(cols.ambient()) + "] do not match a " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " matrix");
  }
  const auto ri = rows.elements();
  const auto cj = cols.elements();
  Matrix<R> out(b.ring(), static_cast<int>(ri.size()), static_cast<int>(cj.size()));
  for (std::size_t x = 0; x < ri.size(); ++x) {
    for (std::size_t y = 0; y < cj.size(); ++y) {
      out(static_cast<int>(x) + 1, static_cast<int>(y) + 1) = b(ri[x], cj[y]);
    }
  }
  return out;
}

/// B with row i and column j removed.
template <CommutativeRing R>
Matrix<R> remove_row_col(const Matrix<R>& b, int i, int j) {
  return submatrix(b, SubsetIndex::full(b.rows()).without(i),
                   SubsetIndex::full(b.cols()).without(j));
}

template <CommutativeRing R>
Matrix<R> transpose(const Matrix<R>& a) {
  Matrix<R> out(a.ring(), a.cols(), a.rows());
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

}  // namespace minorcalc
