#pragma once

#include <cstdint>

#include "soliton_forge/linalg.hpp"
#include "soliton_forge/matrix.hpp"
#include "soliton_forge/rational.hpp"

namespace sforge {

/// SplitMix64: deterministic across platforms, splittable into independent
/// per-index streams so parallel and serial sweeps produce identical output.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return SplitMix64(mixer.next());
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // inclusive range; bound sizes here are tiny so modulo bias is irrelevant
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::uint64_t state_;
};

/// Bounds for randomly drawn rationals: |numerator| <= max_numerator,
/// 1 <= denominator <= max_denominator.
struct SampleConfig {
  long max_numerator = 20;
  long max_denominator = 10;
};

inline Rational random_rational(SplitMix64& rng, const SampleConfig& cfg = {}) {
  const long long p = rng.range(-cfg.max_numerator, cfg.max_numerator);
  const long long q = rng.range(1, cfg.max_denominator);
  return make_rational(p, q);
}

inline Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                            const SampleConfig& cfg = {}) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, cfg);
  return m;
}

inline Matrix random_invertible(SplitMix64& rng, std::size_t n, const SampleConfig& cfg = {}) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, cfg);
    if (determinant(m) != 0) return m;
  }
}

inline Matrix random_symmetric_nondegenerate(SplitMix64& rng, std::size_t n,
                                             const SampleConfig& cfg = {}) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_rational(rng, cfg);
    if (determinant(m) != 0) return m;
  }
}

}  // namespace sforge
