#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "minorcalc/subset.hpp"

namespace minorcalc {

/**
 * A polynomial indeterminate, identified by name.
 *
 * Four families exist:
 *   p{S}    principal-minor symbol for a nonempty subset S
 *   q{I|J}  quasiprincipal-minor symbol
 *   x{i,j}  entry of the generic matrix
 *   name    a free symbol such as "a" or "t" (lowercase, at most 7 chars)
 *
 * The variable is packed into one 64-bit key whose integer order is the
 * variable order: families p < q < x < named; p{S} by (|S|, lex on sorted
 * elements); q{I|J} by (|I|, I, J); x{i,j} by (i, j); names lexicographically.
 */
class Variable {
 public:
  enum class Kind : std::uint8_t { kPrincipal = 0, kQuasi = 1, kEntry = 2, kNamed = 3 };

  static Variable principal(const SubsetIndex& subset);
  static Variable quasi(const SubsetIndex& rows, const SubsetIndex& cols);
  static Variable entry(int row, int col);
  static Variable named(std::string_view name);

  Kind kind() const { return static_cast<Kind>(key_ >> 60); }
  std::uint64_t key() const { return key_; }

  // Only meaningful for the matching family.
  std::uint32_t subset_mask() const;  // p{S}
  std::uint32_t rows_mask() const;    // q{I|J}: I
  std::uint32_t cols_mask() const;    // q{I|J}: J
  int row() const;                    // x{i,j}
  int col() const;
  std::string name() const;           // named

  std::string to_string() const;

  auto operator<=>(const Variable&) const = default;

 private:
  explicit Variable(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

}  // namespace minorcalc

template <>
struct std::hash<minorcalc::Variable> {
  std::size_t operator()(const minorcalc::Variable& v) const noexcept {
    return std::hash<std::uint64_t>{}(v.key());
  }
};
