#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace minorcalc {

/**
 * A subset of [n] = {1, ..., n}, stored as a bitmask (bit k-1 <-> element k).
 *
 * Elements are 1-based everywhere in the public interface and always iterate
 * in increasing order. The ambient size is capped at kMaxAmbient so that
 * subsets also fit into the packed polynomial variable keys.
 */
class SubsetIndex {
 public:
  static constexpr int kMaxAmbient = 16;

  SubsetIndex() = default;
  SubsetIndex(int ambient, std::uint32_t mask);
  SubsetIndex(int ambient, std::initializer_list<int> elements);
  static SubsetIndex from_elements(int ambient, const std::vector<int>& elements);

  static SubsetIndex empty(int ambient) { return SubsetIndex(ambient, 0U); }
  static SubsetIndex full(int ambient);

  int ambient() const { return ambient_; }
  std::uint32_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool is_empty() const { return mask_ == 0; }
  bool contains(int element) const;

  std::vector<int> elements() const;
  // 1-based position of a member within the sorted subset.
  int rank_of(int element) const;

  SubsetIndex with(int element) const;
  SubsetIndex without(int element) const;
  SubsetIndex complement() const;

  // "{1,3}"; the empty set prints as "{}".
  std::string to_string() const;
  // "1,3" without braces, as used inside variable names.
  std::string join() const;

  bool operator==(const SubsetIndex&) const = default;

 private:
  void check_element(int element) const;

  int ambient_ = 0;
  std::uint32_t mask_ = 0;
};

/// Canonical subset order: by size, then lexicographically on the sorted
/// elements. This is also the order of the p{S} variables.
bool canonical_less(std::uint32_t a, std::uint32_t b);

/// All 2^n subsets of [n] in canonical order, starting with the empty set.
std::vector<SubsetIndex> canonical_subsets(int n);

/**
 * Maps P ⊆ [n-1] to P' ⊆ [n] \ {i}: elements below i stay, the rest shift up
 * by one. Then sub_P^P(A with row and column i removed) = sub_{P'}^{P'} A.
 */
SubsetIndex diag_reindex(const SubsetIndex& subset, int removed);

}  // namespace minorcalc
