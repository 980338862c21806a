// Seeded deterministic random draws for verification trials. The uniform
// mapping is spelled out (53-bit mantissa scaling) so identical seeds give
// identical trials on every platform.
#pragma once

#include <cstdint>
#include <random>

namespace ybx {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform draw in [0, 1).
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform draw in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ybx
