#pragma once

#include <cstdint>
#include <random>

namespace hegeo {

// Deterministic generator for the verification suites: raw mt19937_64 bits
// mapped to doubles by hand, so reports are byte-identical for a given seed
// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double next01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next01(); }

  // Inclusive on both ends.
  int uniform_int(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
  }

  bool coin(double p = 0.5) { return next01() < p; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hegeo
