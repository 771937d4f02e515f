#include "minorcalc/harness/demos.hpp"

#include "minorcalc/determinant.hpp"
#include "minorcalc/footnote_algebra.hpp"
#include "minorcalc/harness/random.hpp"
#include "minorcalc/integer_ring.hpp"
#include "minorcalc/polynomial.hpp"

namespace minorcalc::harness {

namespace {

const char* const kNames[8] = {"a", "b", "c", "d", "p", "q", "r", "s"};

template <CommutativeRing R>
std::pair<Matrix<R>, Matrix<R>> cd_pair(const R& ring, const std::array<typename R::Element, 8>& v) {
  const auto& [a, b, c, d, p, q, r, s] = v;
  const auto one = ring.one();
  Matrix<R> cm(ring, {{a, b, one, one}, {c, d, one, one}, {one, one, p, q}, {one, one, r, s}});
  Matrix<R> dm(ring, {{a, b, one, one}, {c, d, one, one}, {one, one, p, r}, {one, one, q, s}});
  return {cm, dm};
}

const SubsetIndex kMiddle(4, {2, 3});

template <CommutativeRing R>
typename R::Element square_minor(const Matrix<R>& a) {
  return det(submatrix(mat_mul(a, a), kMiddle, kMiddle));
}

template <CommutativeRing R>
void fill_common(const R& ring, const std::array<typename R::Element, 8>& v, ExampleCdReport& out) {
  const auto [cm, dm] = cd_pair(ring, v);
  out.minors_equal = principal_minors(cm) == principal_minors(dm);
  const auto c2 = square_minor(cm);
  const auto d2 = square_minor(dm);
  out.c2_minor = ring.format(c2);
  out.d2_minor = ring.format(d2);
  out.squares_differ = !ring.equal(c2, d2);
  const auto factor = ring.mul(sub(ring, v[5], v[6]), sub(ring, v[1], v[2]));
  out.factor = ring.format(factor);
  out.factor_nonzero = !is_zero(ring, factor);
}

std::array<Polynomial, 8> symbols() {
  std::array<Polynomial, 8> v;
  for (std::size_t k = 0; k < 8; ++k) v[k] = Polynomial::variable(Variable::named(kNames[k]));
  return v;
}

bool coincide_with(std::size_t target, std::size_t source) {
  const PolynomialRing zx;
  auto v = symbols();
  v[target] = v[source];
  const auto [cm, dm] = cd_pair(zx, v);
  return square_minor(cm) == square_minor(dm);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

bool ExampleCdReport::reproduced() const {
  if (!minors_equal || squares_differ != factor_nonzero) return false;
  if (symbolic) return difference_is_factor && coincide_if_q_eq_r && coincide_if_b_eq_c;
  return true;
}

ExampleCdReport example_cd_symbolic() {
  const PolynomialRing zx;
  const auto v = symbols();
  ExampleCdReport out;
  out.symbolic = true;
  fill_common(zx, v, out);
  const auto [cm, dm] = cd_pair(zx, v);
  const Polynomial diff = square_minor(cm) - square_minor(dm);
  out.difference = diff.to_string();
  out.difference_is_factor = diff == (v[5] - v[6]) * (v[1] - v[2]);
  out.coincide_if_q_eq_r = coincide_with(5, 6);
  out.coincide_if_b_eq_c = coincide_with(1, 2);
  return out;
}

ExampleCdReport example_cd_numeric(const std::array<BigInt, 8>& values) {
  ExampleCdReport out;
  for (std::size_t k = 0; k < 8; ++k) {
    if (k > 0) out.values += " ";
    out.values += std::string(kNames[k]) + "=" + values[k].str();
  }
  fill_common(IntegerRing{}, values, out);
  return out;
}

std::string ExampleCdReport::to_text() const {
  std::string out;
  out += symbolic ? "example C/D over Z[a,b,c,d,p,q,r,s]\n" : "example C/D with " + values + "\n";
  out += "principal minors of C and D equal (16 subsets): " + yes_no(minors_equal) + "\n";
  out += "{2,3} minor of C^2: " + c2_minor + "\n";
  out += "{2,3} minor of D^2: " + d2_minor + "\n";
  out += "squares differ: " + yes_no(squares_differ) + "\n";
  out += "(q - r)(b - c) = " + factor + (factor_nonzero ? " (nonzero)" : " (zero)") + "\n";
  if (symbolic) {
    out += "difference C^2 - D^2: " + difference + "\n";
    out += "difference equals (q - r)(b - c): " + yes_no(difference_is_factor) + "\n";
    out += "coincide when q = r: " + yes_no(coincide_if_q_eq_r) + "\n";
    out += "coincide when b = c: " + yes_no(coincide_if_b_eq_c) + "\n";
  }
  out += std::string("result: ") + (reproduced() ? "reproduced" : "NOT reproduced") + "\n";
  return out;
}

nlohmann::json ExampleCdReport::to_json() const {
  nlohmann::json doc = {{"symbolic", symbolic},
                        {"minors_equal", minors_equal},
                        {"c2_minor", c2_minor},
                        {"d2_minor", d2_minor},
                        {"squares_differ", squares_differ},
                        {"factor", factor},
                        {"factor_nonzero", factor_nonzero},
                        {"reproduced", reproduced()}};
  if (symbolic) {
    doc["difference"] = difference;
    doc["difference_is_factor"] = difference_is_factor;
    doc["coincide_if_q_eq_r"] = coincide_if_q_eq_r;
    doc["coincide_if_b_eq_c"] = coincide_if_b_eq_c;
  } else {
    doc["values"] = values;
  }
  return doc;
}

CounterexampleReport counterexample(std::uint64_t prime) {
  const FootnoteAlgebra alg(prime);
  const auto a = footnote_matrix(alg);
  CounterexampleReport out;
  out.prime = prime;
  out.matrix = a.to_string();
  const auto table = principal_minors(a);
  for (const auto& s : canonical_subsets(4)) out.minors.emplace_back(s, alg.format(table.at(s)));
  out.all_minors_one = table.all_one();
  const auto value = det(submatrix(mat_pow(a, 2), kMiddle, kMiddle));
  const auto x = alg.x();
  const auto y = alg.y();
  const auto expected = sub(alg, sub(alg, alg.one(), power(alg, x, 3)), alg.mul(x, y));
  out.square_minor = alg.format(value);
  out.expected = alg.format(expected);
  out.matches_expected = alg.equal(value, expected);
  out.differs_from_one = !is_one(alg, value);
  return out;
}

std::string CounterexampleReport::to_text() const {
  std::string out = "footnote algebra over Z/" + std::to_string(prime) + "\n";
  out += "A = " + matrix + "\n";
  out += "principal minors of A:\n";
  for (const auto& [s, v] : minors) out += "  p" + s.to_string() + " = " + v + "\n";
  out += "all principal minors of A are 1: " + yes_no(all_minors_one) + "\n";
  out += "{2,3} minor of A^2: " + square_minor + "\n";
  out += "1 - x^3 - xy in this ring: " + expected + "\n";
  out += "matches: " + yes_no(matches_expected) + "\n";
  out += "differs from 1 (x^3 != 0): " + yes_no(differs_from_one) + "\n";
  out += std::string("result: ") + (reproduced() ? "reproduced" : "NOT reproduced") + "\n";
  return out;
}

nlohmann::json CounterexampleReport::to_json() const {
  nlohmann::json ms = nlohmann::json::array();
  for (const auto& [s, v] : minors) ms.push_back({{"subset", s.elements()}, {"value", v}});
  return {{"ring", "footnote:" + std::to_string(prime)},
          {"matrix", matrix},
          {"minors", ms},
          {"all_minors_one", all_minors_one},
          {"square_minor", square_minor},
          {"expected", expected},
          {"matches_expected", matches_expected},
          {"differs_from_one", differs_from_one},
          {"reproduced", reproduced()}};
}

}  // namespace minorcalc::harness
