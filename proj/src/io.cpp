#include "minorcalc/io.hpp"

#include <fstream>
#include <sstream>

namespace minorcalc {

namespace {

std::uint64_t parse_modulus(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw InputError("missing modulus in ring '" + std::string(whole) + "'");
  std::uint64_t v = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw InputError("bad modulus in ring '" + std::string(whole) + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > 0xFFFFFFFFULL) throw InputError("modulus too large in ring '" + std::string(whole) + "'");
  }
  return v;
}

BigInt json_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const bool ok = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) ==
                                      std::string::npos && s != "-";
    if (ok) return BigInt(s);
  }
  throw InputError("expected an integer entry, got " + v.dump());
}

const nlohmann::json& require(const nlohmann::json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(std::string("matrix JSON is missing \"") + key + "\"");
  }
  return doc.at(key);
}

template <CommutativeRing R, typename F>
Matrix<R> build(const R& ring, int n, const nlohmann::json& entries, F&& convert) {
  if (!entries.is_array() || static_cast<int>(entries.size()) != n) {
    throw InputError("\"entries\" must be an array of n = " + std::to_string(n) + " rows");
  }
  Matrix<R> a(ring, n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw InputError("row " + std::to_string(i + 1) + " must have n = " + std::to_string(n) +
                       " entries");
    }
    for (int j = 0; j < n; ++j) a(i + 1, j + 1) = convert(row[static_cast<std::size_t>(j)]);
  }
  return a;
}

}  // namespace

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "int") return {Kind::kInt, 0};
  if (text == "footnote") return {Kind::kFootnote, 2};
  const auto colon = text.find(':');
  const auto head = text.substr(0, colon);
  const auto tail = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  // "mod4" is accepted as a spelling of "mod:4".
  if (colon == std::string_view::npos && text.size() > 3 && text.substr(0, 3) == "mod") {
    return parse(std::string("mod:") + std::string(text.substr(3)));
  }
  if (head == "mod") {
    RingSpec spec{Kind::kMod, parse_modulus(tail, text)};
    ModularRing check(spec.modulus);
    return spec;
  }
  if (head == "footnote") {
    RingSpec spec{Kind::kFootnote, parse_modulus(tail, text)};
    PrimeField check(spec.modulus);
    return spec;
  }
  throw InputError("unknown ring '" + std::string(text) + "' (expected int, mod:k or footnote:p)");
}

std::string RingSpec::to_string() const {
  switch (kind) {
    case Kind::kMod:
      return "mod:" + std::to_string(modulus);
    case Kind::kFootnote:
      return "footnote:" + std::to_string(modulus);
    case Kind::kInt:
    default:
      return "int";
  }
}

AnyMatrix matrix_from_json(const nlohmann::json& doc) {
  const auto& ring = require(doc, "ring");
  const auto& n_field = require(doc, "n");
  const auto& entries = require(doc, "entries");
  if (!n_field.is_number_integer() || n_field.get<int>() < 0 ||
      n_field.get<int>() > SubsetIndex::kMaxAmbient) {
    throw InputError("\"n\" must be an integer in [0, 16]");
  }
  const int n = n_field.get<int>();
  const auto kind = require(ring, "kind");
  if (!kind.is_string()) throw InputError("\"ring.kind\" must be a string");
  const auto k = kind.get<std::string>();

  if (k == "int") {
    return build(IntegerRing{}, n, entries, json_integer);
  }
  if (k == "mod") {
    const auto& mod = require(ring, "modulus");
    if (!mod.is_number_unsigned()) throw InputError("\"ring.modulus\" must be a positive integer");
    const ModularRing zk(mod.get<std::uint64_t>());
    return build(zk, n, entries, [&](const nlohmann::json& v) {
      const BigInt value = json_integer(v);
      if (value < 0 || value >= zk.modulus()) {
        throw InputError("entry " + value.str() + " is not a canonical residue mod " +
                         std::to_string(zk.modulus()));
      }
      return static_cast<std::uint64_t>(value);
    });
  }
  if (k == "footnote") {
    std::uint64_t p = 2;
    if (ring.contains("modulus")) {
      if (!ring.at("modulus").is_number_unsigned()) {
        throw InputError("\"ring.modulus\" must be a positive integer");
      }
      p = ring.at("modulus").get<std::uint64_t>();
    }
    const FootnoteAlgebra alg(p);
    return build(alg, n, entries, [&](const nlohmann::json& v) {
      if (v.is_string()) return alg.parse(v.get<std::string>());
      if (v.is_array() && v.size() == FootnoteAlgebra::kDim) {
        std::array<std::int64_t, FootnoteAlgebra::kDim> coords{};
        for (std::size_t c = 0; c < FootnoteAlgebra::kDim; ++c) {
          if (!v[c].is_number_integer()) throw InputError("footnote coordinates must be integers");
          coords[c] = v[c].get<std::int64_t>();
        }
        return alg.from_coordinates(coords);
      }
      if (v.is_number_integer()) return alg.from_integer(BigInt(v.get<std::int64_t>()));
      throw InputError("footnote entry must be a string or a 6-vector, got " + v.dump());
    });
  }
  throw InputError("unknown ring kind \"" + k + "\"");
}

AnyMatrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("matrix JSON: ") + e.what());
  }
  return matrix_from_json(doc);
}

AnyMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_json(buffer.str());
}

nlohmann::json matrix_to_json(const Matrix<IntegerRing>& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= a.cols(); ++j) {
      const BigInt& v = a(i, j);
      if (v >= INT64_MIN && v <= INT64_MAX) {
        row.push_back(static_cast<std::int64_t>(v));
      } else {
        row.push_back(v.str());
      }
    }
    rows.push_back(row);
  }
  return {{"ring", {{"kind", "int"}}}, {"n", a.rows()}, {"entries", rows}};
}

nlohmann::json matrix_to_json(const Matrix<ModularRing>& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(row);
  }
  return {{"ring", {{"kind", "mod"}, {"modulus", a.ring().modulus()}}},
          {"n", a.rows()},
          {"entries", rows}};
}

nlohmann::json matrix_to_json(const Matrix<FootnoteAlgebra>& a) {
  return {{"ring", {{"kind", "footnote"}, {"modulus", a.ring().characteristic()}}},
          {"n", a.rows()},
          {"entries", matrix_entries_text(a)}};
}

nlohmann::json certificate_to_json(const OffDiagCertificate& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : c.terms) {
    terms.push_back({{"coeff", t.coeff.to_string()}, {"I", t.rows.elements()}, {"J", t.cols.elements()}});
  }
  return {{"n", c.n}, {"i", c.i}, {"j", c.j}, {"m", c.m}, {"terms", terms}};
}

OffDiagCertificate certificate_from_json(const nlohmann::json& doc) {
  try {
    OffDiagCertificate c;
    c.n = doc.at("n").get<int>();
    c.i = doc.at("i").get<int>();
    c.j = doc.at("j").get<int>();
    c.m = doc.at("m").get<int>();
    for (const auto& t : doc.at("terms")) {
      CertificateTerm term{Polynomial::parse(t.at("coeff").get<std::string>()),
                           SubsetIndex::from_elements(c.n, t.at("I").get<std::vector<int>>()),
                           SubsetIndex::from_elements(c.n, t.at("J").get<std::vector<int>>())};
      check_quasiprincipal(term.rows, term.cols, c.i, c.j);
      c.terms.push_back(std::move(term));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace minorcalc
