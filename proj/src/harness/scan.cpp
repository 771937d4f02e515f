#include "minorcalc/harness/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <set>
#include <thread>

#include "minorcalc/harness/random.hpp"

namespace minorcalc::harness {

ScanMode parse_scan_mode(const std::string& text) {
  if (text == "exhaustive") return ScanMode::kExhaustive;
  if (text == "random") return ScanMode::kRandom;
  if (text == "family") return ScanMode::kFamily;
  throw InputError("unknown scan mode '" + text + "' (expected exhaustive, random or family)");
}

std::string to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::kExhaustive:
      return "exhaustive";
    case ScanMode::kFamily:
      return "family";
    case ScanMode::kRandom:
    default:
      return "random";
  }
}

bool Violation::operator<(const Violation& other) const {
  if (index != other.index) return index < other.index;
  if (m != other.m) return m < other.m;
  return canonical_less(subset.mask(), other.subset.mask());
}

std::uint64_t ScanReport::violating_matrices() const {
  std::set<std::uint64_t> seen;
  for (const auto& v : violations) seen.insert(v.index);
  return seen.size();
}

std::string ScanReport::to_text(bool timing) const {
  std::string out;
  out += "scan: ring " + ring + ", n = " + std::to_string(n) + ", m = 1.." +
         std::to_string(m_max) + ", mode " + harness::to_string(mode) + "\n";
  if (exploratory) {
    out += "EXPLORATORY: " + ring +
           " is not a field; there is no expected outcome for this scan\n";
  }
  out += "seed: " + (seed ? std::to_string(*seed) : harness::to_string(mode)) + "\n";
  out += "scanned: " + std::to_string(scanned) + "\n";
  out += "candidates (all principal minors 1): " + std::to_string(candidates) + "\n";
  out += "violations: " + std::to_string(violations.size()) + " in " +
         std::to_string(violating_matrices()) + " matrices\n";
  for (const auto& v : violations) {
    out += "  #" + std::to_string(v.index) + " m = " + std::to_string(v.m) + " subset " +
           v.subset.to_string() + ": minor = " + v.value +
           (v.reverified ? " (re-verified)" : " (NOT re-verified)") + "\n";
    out += "    A = " + v.matrix + "\n";
  }
  if (timing) out += "elapsed: " + std::to_string(elapsed_seconds) + " s\n";
  return out;
}

nlohmann::json ScanReport::to_json(bool timing) const {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : violations) {
    vs.push_back({{"index", v.index},
                  {"matrix", v.matrix},
                  {"m", v.m},
                  {"subset", v.subset.elements()},
                  {"value", v.value},
                  {"reverified", v.reverified}});
  }
  nlohmann::json doc = {{"ring", ring},
                        {"n", n},
                        {"m_min", 1},
                        {"m_max", m_max},
                        {"mode", harness::to_string(mode)},
                        {"scanned", scanned},
                        {"candidates", candidates},
                        {"violations", vs},
                        {"exploratory", exploratory}};
  if (seed) {
    doc["seed"] = *seed;
  } else {
    doc["seed"] = harness::to_string(mode);
  }
  if (timing) doc["elapsed_seconds"] = elapsed_seconds;
  return doc;
}

unsigned effective_workers(unsigned requested) {
  unsigned workers = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("MINOR_CALC_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(cap, &end, 10);
    if (end != cap && *end == '\0' && v > 0) workers = std::min(workers, static_cast<unsigned>(v));
  }
  return std::max(1U, workers);
}

namespace {

std::uint64_t ring_size(const ModularRing& ring) { return ring.modulus(); }
std::uint64_t ring_size(const FootnoteAlgebra& ring) {
  std::uint64_t size = 1;
  for (std::size_t k = 0; k < FootnoteAlgebra::kDim; ++k) {
    size *= ring.characteristic();
    if (size > kExhaustiveLimit) return kExhaustiveLimit + 1;
  }
  return size;
}
std::uint64_t ring_size(const IntegerRing&) {
  throw InputError("exhaustive and family scans need a finite ring");
}

std::uint64_t element_at(const ModularRing&, std::uint64_t digit) { return digit; }
FootnoteAlgebra::Element element_at(const FootnoteAlgebra& ring, std::uint64_t digit) {
  std::array<std::int64_t, FootnoteAlgebra::kDim> coords{};
  for (auto& c : coords) {
    c = static_cast<std::int64_t>(digit % ring.characteristic());
    digit /= ring.characteristic();
  }
  return ring.from_coordinates(coords);
}
BigInt element_at(const IntegerRing&, std::uint64_t) {
  throw InputError("exhaustive and family scans need a finite ring");
}

// base^exponent, or nullopt once it passes kExhaustiveLimit.
std::optional<std::uint64_t> bounded_power(std::uint64_t base, int exponent) {
  std::uint64_t v = 1;
  for (int k = 0; k < exponent; ++k) {
    if (base != 0 && v > kExhaustiveLimit / base) return std::nullopt;
    v *= base;
  }
  if (v > kExhaustiveLimit) return std::nullopt;
  return v;
}

template <CommutativeRing R>
struct Partial {
  std::uint64_t scanned = 0;
  std::uint64_t candidates = 0;
  std::vector<Violation> violations;
};

template <CommutativeRing R>
void check_matrix(const R& ring, const Matrix<R>& a, std::uint64_t index, int m_max,
                  Partial<R>& out) {
  ++out.scanned;
  if (!principal_minors(a).all_one()) return;
  ++out.candidates;
  Matrix<R> power = a;
  for (int m = 2; m <= m_max; ++m) {
    power = mat_mul(power, a);
    const auto minors = principal_minors(power);
    if (minors.all_one()) continue;
    for (const auto& s : canonical_subsets(a.rows())) {
      if (is_one(ring, minors.at(s))) continue;
      Violation v;
      v.index = index;
      v.matrix = a.to_string();
      v.m = m;
      v.subset = s;
      v.value = ring.format(minors.at(s));
      const auto again = det(submatrix(mat_pow(a, static_cast<std::uint64_t>(m)), s, s));
      v.reverified = ring.equal(again, minors.at(s)) && !is_one(ring, again);
      out.violations.push_back(std::move(v));
    }
  }
}

template <CommutativeRing R>
ScanReport scan_stream(const R& ring, const ScanOptions& opt, std::uint64_t count,
                       const std::function<Matrix<R>(std::uint64_t)>& make) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(effective_workers(opt.workers), std::max<std::uint64_t>(count, 1)));
  std::vector<Partial<R>> parts(workers);
  auto work = [&](unsigned w) {
    for (std::uint64_t k = w; k < count; k += workers) check_matrix(ring, make(k), k, opt.m_max, parts[w]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  ScanReport report;
  report.ring = ring.describe();
  report.n = opt.n;
  report.m_max = opt.m_max;
  report.mode = opt.mode;
  for (auto& part : parts) {
    report.scanned += part.scanned;
    report.candidates += part.candidates;
    for (auto& v : part.violations) report.violations.push_back(std::move(v));
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

template <CommutativeRing R>
ScanReport scan_exhaustive(const R& ring, const ScanOptions& opt) {
  const std::uint64_t size = ring_size(ring);
  const auto count = bounded_power(size, opt.n * opt.n);
  if (!count) {
    throw InputError("exhaustive scan of " + std::to_string(opt.n) + "x" + std::to_string(opt.n) +
                     " matrices over " + ring.describe() + " exceeds 2^24 matrices; use --mode random");
  }
  const int n = opt.n;
  return scan_stream<R>(ring, opt, *count, [&ring, size, n](std::uint64_t k) {
    Matrix<R> a(ring, n, n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        a(i, j) = element_at(ring, k % size);
        k /= size;
      }
    }
    return a;
  });
}

template <CommutativeRing R>
ScanReport scan_random(const R& ring, const ScanOptions& opt) {
  const EntryOptions entries{opt.int_range};
  const int n = opt.n;
  const std::uint64_t seed = opt.seed;
  auto report = scan_stream<R>(ring, opt, opt.trials, [&](std::uint64_t k) {
    TrialRng rng(seed, k);
    if (k % 4 == 1) return random_unipotent(ring, n, rng, entries);
    if (k % 4 == 3 && n == 4) {
      const auto u = random_element(ring, rng, entries);
      const auto v = random_element(ring, rng, entries);
      return footnote_pattern(ring, u, v);
    }
    return random_matrix(ring, n, rng, entries);
  });
  report.seed = opt.seed;
  return report;
}

// Footnote algebra: the built-in matrix alone. Finite Z/k: every (u, v) in the
// same 4x4 pattern.
ScanReport scan_family(const FootnoteAlgebra& ring, const ScanOptions& opt) {
  return scan_stream<FootnoteAlgebra>(ring, opt, 1,
                                      [&ring](std::uint64_t) { return footnote_matrix(ring); });
}

ScanReport scan_family(const ModularRing& ring, const ScanOptions& opt) {
  const std::uint64_t size = ring.modulus();
  if (!bounded_power(size, 2)) throw InputError("family scan over " + ring.describe() + " is too large");
  return scan_stream<ModularRing>(ring, opt, size * size, [&ring, size](std::uint64_t k) {
    return footnote_pattern(ring, k / size, k % size);
  });
}

ScanReport scan_family(const IntegerRing&, const ScanOptions&) {
  throw InputError("family scans need a finite ring");
}

bool is_exploratory(const RingSpec& spec) {
  return spec.kind == RingSpec::Kind::kMod && !is_prime(spec.modulus);
}

}  // namespace

ScanReport run_scan(const ScanOptions& opt) {
  if (opt.n < 1 || opt.n > SubsetIndex::kMaxAmbient) throw InputError("scan size n must be in [1, 16]");
  if (opt.m_max < 1) throw InputError("m_max must be at least 1");
  if (opt.mode == ScanMode::kFamily && opt.n != 4) {
    throw InputError("family scans use the 4x4 counterexample pattern; pass --n 4");
  }
  const auto start = std::chrono::steady_clock::now();
  ScanReport report = with_ring(opt.ring, [&](const auto& ring) {
    switch (opt.mode) {
      case ScanMode::kExhaustive:
        return scan_exhaustive(ring, opt);
      case ScanMode::kFamily:
        return scan_family(ring, opt);
      case ScanMode::kRandom:
      default:
        return scan_random(ring, opt);
    }
  });
  report.exploratory = is_exploratory(opt.ring);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace minorcalc::harness
