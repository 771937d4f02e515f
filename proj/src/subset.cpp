#include "minorcalc/subset.hpp"

#include <algorithm>

#include "minorcalc/errors.hpp"

namespace minorcalc {

namespace {

std::uint32_t full_mask(int ambient) {
  return ambient == 32 ? ~0U : ((1U << ambient) - 1U);
}

void check_ambient(int ambient) {
  if (ambient < 0 || ambient > SubsetIndex::kMaxAmbient) {
    throw InputError("ambient size " + std::to_string(ambient) +
                     " outside [0, " + std::to_string(SubsetIndex::kMaxAmbient) + "]");
  }
}

}  // namespace

SubsetIndex::SubsetIndex(int ambient, std::uint32_t mask)
    : ambient_(ambient), mask_(mask) {
  check_ambient(ambient);
  if ((mask & ~full_mask(ambient)) != 0) {
    throw InputError("subset mask has elements outside [" + std::to_string(ambient) + "]");
  }
}

SubsetIndex::SubsetIndex(int ambient, std::initializer_list<int> elements)
    : SubsetIndex(from_elements(ambient, std::vector<int>(elements))) {}

SubsetIndex SubsetIndex::from_elements(int ambient, const std::vector<int>& elements) {
  check_ambient(ambient);
  SubsetIndex s(ambient, 0U);
  for (int e : elements) {
    s.check_element(e);
    s.mask_ |= 1U << (e - 1);
  }
  return s;
}

SubsetIndex SubsetIndex::full(int ambient) {
  check_ambient(ambient);
  return SubsetIndex(ambient, full_mask(ambient));
}

void SubsetIndex::check_element(int element) const {
  if (element < 1 || element > ambient_) {
    throw InputError("index " + std::to_string(element) + " outside [1, " +
                     std::to_string(ambient_) + "]");
  }
}

bool SubsetIndex::contains(int element) const {
  return element >= 1 && element <= ambient_ && ((mask_ >> (element - 1)) & 1U) != 0;
}

std::vector<int> SubsetIndex::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

int SubsetIndex::rank_of(int element) const {
  if (!contains(element)) {
    throw InputError(std::to_string(element) + " is not a member of " + to_string());
  }
  const std::uint32_t below = mask_ & ((1U << (element - 1)) - 1U);
  return std::popcount(below) + 1;
}

SubsetIndex SubsetIndex::with(int element) const {
  check_element(element);
  return SubsetIndex(ambient_, mask_ | (1U << (element - 1)));
}

SubsetIndex SubsetIndex::without(int element) const {
  check_element(element);
  return SubsetIndex(ambient_, mask_ & ~(1U << (element - 1)));
}

SubsetIndex SubsetIndex::complement() const {
  return SubsetIndex(ambient_, full_mask(ambient_) & ~mask_);
}

std::string SubsetIndex::join() const {
  std::string out;
  for (int e : elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

std::string SubsetIndex::to_string() const { return "{" + join() + "}"; }

bool canonical_less(std::uint32_t a, std::uint32_t b) {
  const int sa = std::popcount(a);
  const int sb = std::popcount(b);
  if (sa != sb) return sa < sb;
  if (a == b) return false;
  // Equal sizes: the set owning the smallest element of the symmetric
  // difference comes first.
  const std::uint32_t diff = a ^ b;
  const std::uint32_t lowest = diff & (~diff + 1U);
  return (a & lowest) != 0;
}

std::vector<SubsetIndex> canonical_subsets(int n) {
  check_ambient(n);
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::sort(masks.begin(), masks.end(), canonical_less);
  std::vector<SubsetIndex> out;
  out.reserve(masks.size());
  for (auto m : masks) out.emplace_back(n, m);
  return out;
}

SubsetIndex diag_reindex(const SubsetIndex& subset, int removed) {
  const int n = subset.ambient() + 1;
  if (removed < 1 || removed > n) {
    throw InputError("removed index " + std::to_string(removed) + " outside [1, " +
                     std::to_string(n) + "]");
  }
  const std::uint32_t low = (1U << (removed - 1)) - 1U;
  const std::uint32_t mask = (subset.mask() & low) | ((subset.mask() & ~low) << 1);
  return SubsetIndex(n, mask);
}

}  // namespace minorcalc
