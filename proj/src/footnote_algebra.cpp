#include "minorcalc/footnote_algebra.hpp"

#include <cctype>
#include <string>

#include "minorcalc/errors.hpp"

namespace minorcalc {

namespace {

constexpr std::array<int, FootnoteAlgebra::kDim> kXDegree{0, 1, 0, 2, 0, 3};
constexpr std::array<int, FootnoteAlgebra::kDim> kYDegree{0, 0, 1, 0, 2, 0};
constexpr std::array<const char*, FootnoteAlgebra::kDim> kNames{"1", "x", "y", "x^2", "y^2", "x^3"};

struct Product {
  int index = -1;  // -1: the product is zero
  bool negated = false;
};

// Product of two basis elements, reduced modulo the ideal.
constexpr Product basis_product(std::size_t a, std::size_t b) {
  const int dx = kXDegree[a] + kXDegree[b];
  const int dy = kYDegree[a] + kYDegree[b];
  if (dx > 0 && dy > 0) return {};
  if (dy == 0) {
    switch (dx) {
      case 0: return {0, false};
      case 1: return {1, false};
      case 2: return {3, false};
      case 3: return {5, false};
      default: return {};
    }
  }
  switch (dy) {
    case 1: return {2, false};
    case 2: return {4, false};
    case 3: return {5, true};  // y^3 = -x^3
    default: return {};
  }
}

}  // namespace

FootnoteAlgebra::FootnoteAlgebra(std::uint64_t prime) : base_(prime) {}

FootnoteAlgebra::Element FootnoteAlgebra::basis(Basis b) const {
  Element e{};
  e[b] = base_.one();
  return e;
}

FootnoteAlgebra::Element FootnoteAlgebra::add(const Element& a, const Element& b) const {
  Element out{};
  for (std::size_t k = 0; k < kDim; ++k) out[k] = base_.add(a[k], b[k]);
  return out;
}

FootnoteAlgebra::Element FootnoteAlgebra::neg(const Element& a) const {
  Element out{};
  for (std::size_t k = 0; k < kDim; ++k) out[k] = base_.neg(a[k]);
  return out;
}

FootnoteAlgebra::Element FootnoteAlgebra::mul(const Element& a, const Element& b) const {
  Element out{};
  for (std::size_t i = 0; i < kDim; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < kDim; ++j) {
      if (b[j] == 0) continue;
      const Product p = basis_product(i, j);
      if (p.index < 0) continue;
      auto term = base_.mul(a[i], b[j]);
      if (p.negated) term = base_.neg(term);
      out[static_cast<std::size_t>(p.index)] = base_.add(out[static_cast<std::size_t>(p.index)], term);
    }
  }
  return out;
}

FootnoteAlgebra::Element FootnoteAlgebra::from_integer(const BigInt& v) const {
  Element e{};
  e[kOne] = base_.from_integer(v);
  return e;
}

std::optional<FootnoteAlgebra::Element> FootnoteAlgebra::unit_inverse(const Element& a) const {
  // a = c(1 + n) with n nilpotent (n^4 = 0), so a^{-1} = c^{-1}(1 - n + n^2 - n^3).
  if (a[kOne] == 0) return std::nullopt;
  const auto c_inv = *base_.unit_inverse(a[kOne]);
  Element scaled{};
  for (std::size_t k = 0; k < kDim; ++k) scaled[k] = base_.mul(a[k], c_inv);
  Element nil = scaled;
  nil[kOne] = 0;
  const Element minus_nil = neg(nil);
  Element result = one();
  Element pw = one();
  for (int k = 1; k <= 3; ++k) {
    pw = mul(pw, minus_nil);
    result = add(result, pw);
  }
  for (auto& c : result) c = base_.mul(c, c_inv);
  return result;
}

FootnoteAlgebra::Element FootnoteAlgebra::from_coordinates(
    const std::array<std::int64_t, kDim>& coords) const {
  Element e{};
  for (std::size_t k = 0; k < kDim; ++k) e[k] = base_.from_int64(coords[k]);
  return e;
}

std::string FootnoteAlgebra::format(const Element& a) const {
  const std::uint64_t p = characteristic();
  std::string out;
  for (std::size_t k = 0; k < kDim; ++k) {
    if (a[k] == 0) continue;
    const bool negative = a[k] > p / 2;
    const std::uint64_t magnitude = negative ? p - a[k] : a[k];
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == kOne) {
      out += std::to_string(magnitude);
    } else if (magnitude == 1) {
      out += kNames[k];
    } else {
      out += std::to_string(magnitude) + "*" + kNames[k];
    }
  }
  return out.empty() ? "0" : out;
}

FootnoteAlgebra::Element FootnoteAlgebra::parse(std::string_view text) const {
  std::string s;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) == 0) s += c;
  }
  if (s.empty()) throw InputError("empty footnote-algebra element");
  Element out{};
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw InputError("expected '+' or '-' in '" + std::string(text) + "'");
    }
    std::int64_t coeff = 1;
    bool have_coeff = false;
    const std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) != 0) ++pos;
    if (pos > digits) {
      coeff = std::stoll(s.substr(digits, pos - digits));
      have_coeff = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    std::size_t index = kOne;
    if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'y')) {
      const char var = s[pos++];
      int exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::size_t e0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) != 0) ++pos;
        if (pos == e0) throw InputError("missing exponent in '" + std::string(text) + "'");
        exponent = std::stoi(s.substr(e0, pos - e0));
      }
      bool found = false;
      for (std::size_t k = 1; k < kDim; ++k) {
        const int want = var == 'x' ? kXDegree[k] : kYDegree[k];
        const int other = var == 'x' ? kYDegree[k] : kXDegree[k];
        if (want == exponent && other == 0) {
          index = k;
          found = true;
        }
      }
      if (!found) {
        throw InputError("'" + std::string(1, var) + "^" + std::to_string(exponent) +
                         "' is not a basis monomial (1, x, y, x^2, y^2, x^3)");
      }
    } else if (!have_coeff) {
      throw InputError("cannot parse footnote-algebra element '" + std::string(text) + "'");
    }
    auto value = base_.from_int64(coeff);
    if (negative) value = base_.neg(value);
    out[index] = base_.add(out[index], value);
  }
  return out;
}

}  // namespace minorcalc
