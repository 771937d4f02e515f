#include "minorcalc/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace minorcalc {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Variable v, std::uint32_t exponent) {
  if (exponent != 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
    m.degree_ += e;
  }
  return m;
}

std::uint32_t Monomial::exponent(Variable v) const {
  for (const auto& [w, e] : factors_) {
    if (w == v) return e;
  }
  return 0;
}

Monomial Monomial::without(Variable v) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.first == v) continue;
    m.factors_.push_back(f);
    m.degree_ += f.second;
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first < ib->first) {
      m.factors_.push_back(*ia++);
    } else if (ib->first < ia->first) {
      m.factors_.push_back(*ib++);
    } else {
      m.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  m.factors_.insert(m.factors_.end(), ia, a.factors_.end());
  m.factors_.insert(m.factors_.end(), ib, b.factors_.end());
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.to_string();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [v, e] : factors_) {
    h ^= std::hash<std::uint64_t>{}(v.key() * 31U + e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (fa[k].first != fb[k].first) {
      // The monomial containing the smaller variable has a positive exponent
      // where the other has zero, so it is the larger one.
      return fb[k].first < fa[k].first;
    }
    if (fa[k].second != fb[k].second) return fa[k].second < fb[k].second;
  }
  return fa.size() < fb.size();
}

// -------------------------------------------------------------- Polynomial

namespace {

bool term_before(const Polynomial::Term& a, const Polynomial::Term& b) {
  return grlex_less(b.monomial, a.monomial);
}

}  // namespace

Polynomial::Polynomial(BigInt constant) {
  if (constant != 0) terms_.push_back({Monomial(), std::move(constant)});
}

Polynomial Polynomial::variable(Variable v) { return monomial(Monomial(v), 1); }

Polynomial Polynomial::monomial(Monomial m, BigInt coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.push_back({std::move(m), std::move(coeff)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::unordered_map<Monomial, BigInt, MonomialHash> acc;
  acc.reserve(terms.size());
  for (auto& t : terms) acc[std::move(t.monomial)] += t.coeff;
  Polynomial p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.push_back({m, std::move(c)});
  }
  std::sort(p.terms_.begin(), p.terms_.end(), term_before);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

BigInt Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

std::uint64_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::vector<Variable> Polynomial::variables() const {
  std::vector<Variable> vars;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) vars.push_back(f.first);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::uint32_t Polynomial::degree_in(Variable v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(v));
  return d;
}

Polynomial Polynomial::coefficient_of(Variable v, std::uint32_t k) const {
  std::vector<Term> picked;
  for (const auto& t : terms_) {
    if (t.monomial.exponent(v) == k) picked.push_back({t.monomial.without(v), t.coeff});
  }
  return from_terms(std::move(picked));
}

Polynomial Polynomial::scaled(const BigInt& factor) const {
  if (factor == 0) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= factor;
  return p;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::merge(const Polynomial& a, const Polynomial& b, bool negate_b) {
  Polynomial out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  auto push_b = [&](const Term& t) {
    out.terms_.push_back(t);
    if (negate_b) out.terms_.back().coeff = -out.terms_.back().coeff;
  };
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    if (term_before(*ia, *ib)) {
      out.terms_.push_back(*ia++);
    } else if (term_before(*ib, *ia)) {
      push_b(*ib++);
    } else {
      BigInt c = negate_b ? BigInt(ia->coeff - ib->coeff) : BigInt(ia->coeff + ib->coeff);
      if (c != 0) out.terms_.push_back({ia->monomial, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  for (; ia != a.terms_.end(); ++ia) out.terms_.push_back(*ia);
  for (; ib != b.terms_.end(); ++ib) push_b(*ib);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  *this = merge(*this, other, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  *this = merge(*this, other, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b.scaled(a.constant_term());
  if (b.is_constant()) return a.scaled(b.constant_term());
  std::unordered_map<Monomial, BigInt, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      acc[ta.monomial * tb.monomial] += ta.coeff * tb.coeff;
    }
  }
  Polynomial p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.push_back({m, std::move(c)});
  }
  std::sort(p.terms_.begin(), p.terms_.end(), term_before);
  return p;
}

Polynomial operator-(Polynomial a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const BigInt magnitude = negative ? BigInt(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += t.monomial.to_string();
    } else {
      out += magnitude.str() + "*" + t.monomial.to_string();
    }
  }
  return out;
}

// ------------------------------------------------------------------ Parser

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    std::vector<Polynomial::Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
    }
    terms.push_back(parse_term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = get();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      terms.push_back(parse_term(c == '-'));
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Polynomial::Term parse_term(bool negative) {
    BigInt coeff = 1;
    std::vector<Monomial::Factor> factors;
    bool any = false;
    do {
      skip_ws();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
        coeff *= parse_integer();
      } else {
        const std::optional<Variable> v = parse_variable();
        std::uint32_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          get();
          skip_ws();
          const BigInt big = parse_integer();
          if (big > 0xFFFFFFFFU) fail("exponent too large");
          e = static_cast<std::uint32_t>(big);
        }
        if (v) factors.emplace_back(*v, e);
      }
      any = true;
      skip_ws();
    } while (!at_end() && peek() == '*' && (get(), true));
    if (!any) fail("expected a term");
    if (negative) coeff = -coeff;
    return {Monomial::from_factors(std::move(factors)), coeff};
  }

  BigInt parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_small() {
    skip_ws();
    const BigInt v = parse_integer();
    if (v < 1 || v > 0xFFFF) fail("index out of range");
    return static_cast<int>(v);
  }

  std::vector<int> parse_list(char terminator) {
    std::vector<int> out;
    skip_ws();
    if (!at_end() && peek() == terminator) return out;
    while (true) {
      out.push_back(parse_small());
      skip_ws();
      if (!at_end() && peek() == ',') {
        get();
        continue;
      }
      return out;
    }
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || get() != c) fail(std::string("expected '") + c + "'");
  }

  SubsetIndex subset_of(const std::vector<int>& elements) {
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if (elements[k] > SubsetIndex::kMaxAmbient) fail("subset element above 16");
      if (k > 0 && elements[k] <= elements[k - 1]) fail("subset elements must increase");
    }
    return SubsetIndex::from_elements(SubsetIndex::kMaxAmbient, elements);
  }

  // std::nullopt stands for p{}, the constant 1.
  std::optional<Variable> parse_variable() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) != 0 || peek() == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a variable");
    const std::string name(text_.substr(start, pos_ - start));
    if (at_end() || peek() != '{') {
      try {
        return Variable::named(name);
      } catch (const InputError& e) {
        fail(e.what());
      }
    }
    get();  // '{'
    if (name == "p") {
      const auto elems = parse_list('}');
      expect('}');
      if (elems.empty()) return std::nullopt;
      return Variable::principal(subset_of(elems));
    }
    if (name == "x") {
      const int i = parse_small();
      expect(',');
      const int j = parse_small();
      expect('}');
      return Variable::entry(i, j);
    }
    if (name == "q") {
      const auto rows = parse_list('|');
      expect('|');
      const auto cols = parse_list('}');
      expect('}');
      try {
        return Variable::quasi(subset_of(rows), subset_of(cols));
      } catch (const InputError& e) {
        fail(e.what());
      }
    }
    fail("unknown indexed variable family '" + name + "'");
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace minorcalc
