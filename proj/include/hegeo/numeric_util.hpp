#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "hegeo/errors.hpp"

namespace hegeo {

// Weights below this are exact zeros for support purposes; anything smaller
// is denormal-range noise that would only produce spurious infinities in
// weight ratios.
inline constexpr double kZeroWeight = 1e-300;

inline bool weight_is_zero(double w) { return w < kZeroWeight; }

// Neumaier-compensated sum in the given order.
inline double neumaier_sum(std::span<const double> xs) {
  double s = 0.0, c = 0.0;
  for (double x : xs) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  return s + c;
}

// Order-independent sum: sorts the terms by value first, so permuting the
// inputs (e.g. relabeling a measure's atoms) cannot change the result bit
// for bit.
inline double sorted_sum(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  return neumaier_sum(xs);
}

// Clamps x into [lo, hi] when it is within `slack` of the interval;
// anything further out is a logic error, not rounding.
inline double clamp_or_fail(double x, double lo, double hi, double slack,
                            const char* what) {
  if (x < lo) {
    if (x < lo - slack)
      fail(Errc::numerical_inconsistency, std::string(what) +
                                              ": value " + std::to_string(x) +
                                              " below " + std::to_string(lo));
    return lo;
  }
  if (x > hi) {
    if (x > hi + slack)
      fail(Errc::numerical_inconsistency, std::string(what) +
                                              ": value " + std::to_string(x) +
                                              " above " + std::to_string(hi));
    return hi;
  }
  return x;
}

// sqrt of a quantity that is nonnegative up to rounding at scale `scale`.
inline double sqrt_nonneg(double x, double scale, const char* what) {
  if (x < 0.0) {
    if (x < -1e-9 * std::max(1.0, scale))
      fail(Errc::numerical_inconsistency,
           std::string(what) + ": negative radicand " + std::to_string(x));
    return 0.0;
  }
  return std::sqrt(x);
}

}  // namespace hegeo
