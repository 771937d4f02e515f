#pragma once

#include <cstdint>

#include "minorcalc/footnote_algebra.hpp"
#include "minorcalc/integer_ring.hpp"
#include "minorcalc/matrix.hpp"
#include "minorcalc/modular_ring.hpp"

namespace minorcalc::harness {

/**
 * SplitMix64. The stream for trial k of a run with seed s is
 * TrialRng(s, k); it depends on nothing else, so workers can take any
 * partition of the trial indices and still reproduce the same trials.
 */
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial)
      : state_(mix(seed ^ mix(trial + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform in [lo, hi]; the modulo bias is negligible for our ranges.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

struct EntryOptions {
  std::int64_t int_range = 9;  // integer entries drawn from [-int_range, int_range]
};

inline BigInt random_element(const IntegerRing&, TrialRng& rng, const EntryOptions& opt) {
  return rng.uniform(-opt.int_range, opt.int_range);
}

inline std::uint64_t random_element(const ModularRing& ring, TrialRng& rng, const EntryOptions&) {
  return static_cast<std::uint64_t>(rng.uniform(0, static_cast<std::int64_t>(ring.modulus()) - 1));
}

inline FootnoteAlgebra::Element random_element(const FootnoteAlgebra& ring, TrialRng& rng,
                                               const EntryOptions&) {
  const auto p = static_cast<std::int64_t>(ring.characteristic());
  std::array<std::int64_t, FootnoteAlgebra::kDim> coords{};
  for (auto& c : coords) c = rng.uniform(0, p - 1);
  return ring.from_coordinates(coords);
}

template <CommutativeRing R>
Matrix<R> random_matrix(const R& ring, int n, TrialRng& rng, const EntryOptions& opt = {}) {
  Matrix<R> a(ring, n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) a(i, j) = random_element(ring, rng, opt);
  }
  return a;
}

/// Upper or lower triangular with ones on the diagonal; all principal minors
/// of such a matrix are 1.
template <CommutativeRing R>
Matrix<R> random_unipotent(const R& ring, int n, TrialRng& rng, const EntryOptions& opt = {}) {
  const bool upper = (rng.next() & 1U) != 0;
  Matrix<R> a(ring, n, n);
  for (int i = 1; i <= n; ++i) {
    a(i, i) = ring.one();
    for (int j = i + 1; j <= n; ++j) {
      if (upper) {
        a(i, j) = random_element(ring, rng, opt);
      } else {
        a(j, i) = random_element(ring, rng, opt);
      }
    }
  }
  return a;
}

/// The 4x4 shape of the footnote counterexample with u, v in place of x, y:
///   [[1,1,0,0],[0,1,v,u],[u,0,1,v],[v,0,u,1]].
template <CommutativeRing R>
Matrix<R> footnote_pattern(const R& ring, const typename R::Element& u,
                           const typename R::Element& v) {
  const auto one = ring.one();
  const auto zero = ring.zero();
  return Matrix<R>(ring, {{one, one, zero, zero},
                          {zero, one, v, u},
                          {u, zero, one, v},
                          {v, zero, u, one}});
}

inline Matrix<FootnoteAlgebra> footnote_matrix(const FootnoteAlgebra& ring) {
  return footnote_pattern(ring, ring.x(), ring.y());
}

}  // namespace minorcalc::harness
