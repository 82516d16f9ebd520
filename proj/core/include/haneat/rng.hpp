#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace haneat {

/// Seeded random stream with platform-independent draws.
///
/// The standard distributions are implementation-defined, so uniform reals,
/// indices and coin flips are derived from the raw 64-bit engine output here.
/// Degenerate draws (`index(1)`, `bernoulli(0)`, `bernoulli(1)`) consume no
/// engine state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform in [0, n); n must be positive.
  std::size_t index(std::size_t n);
  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer, used to derive independent seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace haneat
