#pragma once

/**
 * @file io.hpp
 * @brief Ring specifications, matrix JSON and certificate JSON.
 *
 * Matrix files look like
 *   {"ring": {"kind": "mod", "modulus": 4}, "n": 2, "entries": [[1, 2], [3, 0]]}
 * with kind "int" (integer entries; big values may be given as strings),
 * "mod" (canonical residues) or "footnote" (6-vectors over the basis
 * 1, x, y, x^2, y^2, x^3, or strings such as "x", "y^2", "1 + x^3").
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "minorcalc/determinant.hpp"
#include "minorcalc/footnote_algebra.hpp"
#include "minorcalc/integer_ring.hpp"
#include "minorcalc/matrix.hpp"
#include "minorcalc/modular_ring.hpp"
#include "minorcalc/universal.hpp"

namespace minorcalc {

struct RingSpec {
  enum class Kind { kInt, kMod, kFootnote };
  Kind kind = Kind::kInt;
  std::uint64_t modulus = 0;  // mod: k; footnote: the base prime

  /// "int", "mod:k" (or "modk") or "footnote:p" ("footnote" alone means p = 2).
  static RingSpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const RingSpec&) const = default;
};

/// Calls f with the ring handle named by spec.
template <typename F>
decltype(auto) with_ring(const RingSpec& spec, F&& f) {
  switch (spec.kind) {
    case RingSpec::Kind::kMod:
      return f(ModularRing(spec.modulus));
    case RingSpec::Kind::kFootnote:
      return f(FootnoteAlgebra(spec.modulus));
    case RingSpec::Kind::kInt:
    default:
      return f(IntegerRing{});
  }
}

using AnyMatrix =
    std::variant<Matrix<IntegerRing>, Matrix<ModularRing>, Matrix<FootnoteAlgebra>>;

AnyMatrix matrix_from_json(const nlohmann::json& doc);
AnyMatrix parse_matrix_json(std::string_view text);
AnyMatrix read_matrix_file(const std::string& path);

nlohmann::json matrix_to_json(const Matrix<IntegerRing>& a);
nlohmann::json matrix_to_json(const Matrix<ModularRing>& a);
nlohmann::json matrix_to_json(const Matrix<FootnoteAlgebra>& a);

/// Entries rendered with the ring's format(), row by row.
template <CommutativeRing R>
nlohmann::json matrix_entries_text(const Matrix<R>& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= a.cols(); ++j) row.push_back(a.ring().format(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

/// One line per subset in canonical order: "p{1,2} = -2".
template <CommutativeRing R>
std::string format_minor_table(const MinorTable<R>& table) {
  std::string out;
  for (const auto& s : canonical_subsets(table.n())) {
    out += "p" + s.to_string() + " = " + table.ring().format(table.at(s)) + "\n";
  }
  return out;
}

template <CommutativeRing R>
nlohmann::json minor_table_to_json(const MinorTable<R>& table) {
  nlohmann::json minors = nlohmann::json::array();
  for (const auto& s : canonical_subsets(table.n())) {
    minors.push_back({{"subset", s.elements()}, {"value", table.ring().format(table.at(s))}});
  }
  return {{"ring", table.ring().describe()}, {"n", table.n()}, {"minors", minors}};
}

nlohmann::json certificate_to_json(const OffDiagCertificate& c);
OffDiagCertificate certificate_from_json(const nlohmann::json& doc);

}  // namespace minorcalc
