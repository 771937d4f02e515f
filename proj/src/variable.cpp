#include "minorcalc/variable.hpp"

#include <bit>

#include "minorcalc/errors.hpp"

namespace minorcalc {

namespace {

constexpr int kKindShift = 60;
constexpr std::uint64_t kLex16 = 0xFFFF;

// Reverses the low 16 bits: element 1 lands on the most significant bit.
std::uint32_t reverse16(std::uint32_t mask) {
  std::uint32_t out = 0;
  for (int b = 0; b < 16; ++b) {
    if (((mask >> b) & 1U) != 0) out |= 1U << (15 - b);
  }
  return out;
}

// For equal-size subsets, ascending key <=> ascending lexicographic order on
// the sorted element lists.
std::uint64_t lex_key(std::uint32_t mask) { return kLex16 - reverse16(mask); }
std::uint32_t from_lex_key(std::uint64_t key) {
  return reverse16(static_cast<std::uint32_t>(kLex16 - key));
}

std::uint64_t kind_bits(Variable::Kind k) {
  return static_cast<std::uint64_t>(k) << kKindShift;
}

std::string mask_join(std::uint32_t mask) {
  std::string out;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    if (!out.empty()) out += ',';
    out += std::to_string(std::countr_zero(m) + 1);
  }
  return out;
}

}  // namespace

Variable Variable::principal(const SubsetIndex& subset) {
  if (subset.is_empty()) {
    throw InputError("p{} is the constant 1, not a variable");
  }
  const auto mask = subset.mask();
  return Variable(kind_bits(Kind::kPrincipal) |
                  (static_cast<std::uint64_t>(std::popcount(mask)) << 16) | lex_key(mask));
}

Variable Variable::quasi(const SubsetIndex& rows, const SubsetIndex& cols) {
  if (rows.size() != cols.size() || rows.is_empty()) {
    throw InputError("q{I|J} needs nonempty I and J of equal size");
  }
  return Variable(kind_bits(Kind::kQuasi) |
                  (static_cast<std::uint64_t>(rows.size()) << 40) |
                  (lex_key(rows.mask()) << 20) | lex_key(cols.mask()));
}

Variable Variable::entry(int row, int col) {
  if (row < 1 || col < 1 || row > 0xFFFF || col > 0xFFFF) {
    throw InputError("x{i,j} indices must lie in [1, 65535]");
  }
  return Variable(kind_bits(Kind::kEntry) | (static_cast<std::uint64_t>(row) << 16) |
                  static_cast<std::uint64_t>(col));
}

Variable Variable::named(std::string_view name) {
  if (name.empty() || name.size() > 7) {
    throw InputError("symbol name must have 1 to 7 characters: '" + std::string(name) + "'");
  }
  if (name.front() < 'a' || name.front() > 'z') {
    throw InputError("symbol name must start with a lowercase letter: '" + std::string(name) + "'");
  }
  std::uint64_t packed = 0;
  for (std::size_t k = 0; k < 7; ++k) {
    packed <<= 8;
    if (k < name.size()) {
      const char c = name[k];
      const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
      if (!ok) throw InputError("invalid character in symbol name '" + std::string(name) + "'");
      packed |= static_cast<unsigned char>(c);
    }
  }
  return Variable(kind_bits(Kind::kNamed) | packed);
}

std::uint32_t Variable::subset_mask() const { return from_lex_key(key_ & kLex16); }
std::uint32_t Variable::rows_mask() const { return from_lex_key((key_ >> 20) & kLex16); }
std::uint32_t Variable::cols_mask() const { return from_lex_key(key_ & kLex16); }
int Variable::row() const { return static_cast<int>((key_ >> 16) & 0xFFFF); }
int Variable::col() const { return static_cast<int>(key_ & 0xFFFF); }

std::string Variable::name() const {
  std::string out;
  for (int k = 6; k >= 0; --k) {
    const auto c = static_cast<char>((key_ >> (8 * k)) & 0xFF);
    if (c == '\0') break;
    out += c;
  }
  return out;
}

std::string Variable::to_string() const {
  switch (kind()) {
    case Kind::kPrincipal:
      return "p{" + mask_join(subset_mask()) + "}";
    case Kind::kQuasi:
      return "q{" + mask_join(rows_mask()) + "|" + mask_join(cols_mask()) + "}";
    case Kind::kEntry:
      return "x{" + std::to_string(row()) + "," + std::to_string(col()) + "}";
    case Kind::kNamed:
      return name();
  }
  return "?";
}

}  // namespace minorcalc
