#pragma once

/**
 * @file scan.hpp
 * @brief Finite-ring scans: find matrices whose principal minors are all 1
 * and check whether the same holds for their powers.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "minorcalc/io.hpp"

namespace minorcalc::harness {

enum class ScanMode { kExhaustive, kRandom, kFamily };

ScanMode parse_scan_mode(const std::string& text);
std::string to_string(ScanMode mode);

struct ScanOptions {
  RingSpec ring;
  int n = 3;
  int m_max = 4;
  ScanMode mode = ScanMode::kRandom;
  std::uint64_t trials = 1000;  // random mode only
  std::uint64_t seed = 1;       // random mode only
  unsigned workers = 0;         // 0: hardware concurrency, capped by MINOR_CALC_WORKERS
  std::int64_t int_range = 9;
};

struct Violation {
  std::uint64_t index = 0;  // position in the scanned stream
  std::string matrix;       // Matrix::to_string of A
  int m = 0;
  SubsetIndex subset;
  std::string value;        // the principal minor of A^m on subset
  bool reverified = false;  // det(submatrix(mat_pow(A, m))) reproduces value

  bool operator<(const Violation& other) const;
};

struct ScanReport {
  std::string ring;
  int n = 0;
  int m_max = 0;
  ScanMode mode = ScanMode::kRandom;
  std::optional<std::uint64_t> seed;  // empty for exhaustive and family scans, which print the mode
  std::uint64_t scanned = 0;
  std::uint64_t candidates = 0;
  std::vector<Violation> violations;
  bool exploratory = false;
  double elapsed_seconds = 0;

  /// Distinct matrices with at least one violation.
  std::uint64_t violating_matrices() const;

  /// Elapsed time is part of the output only when `timing` is set, so that
  /// reports of identical scans are byte-identical.
  std::string to_text(bool timing = false) const;
  nlohmann::json to_json(bool timing = false) const;
};

/// Largest stream an exhaustive scan may enumerate.
inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 24;

/// Worker count after applying MINOR_CALC_WORKERS.
unsigned effective_workers(unsigned requested);

/// Throws InputError for unsupported combinations (exhaustive over Z or
/// beyond kExhaustiveLimit, family scans with n != 4, ...).
ScanReport run_scan(const ScanOptions& opt);

}  // namespace minorcalc::harness
