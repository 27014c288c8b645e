#pragma once

#include <stdexcept>
#include <string>

namespace hegeo {

enum class Errc {
  zero_mass,
  incompatible_support,
  alpha_out_of_range,
  s_out_of_range,
  numerical_inconsistency,
  degenerate_angle,
  step_out_of_domain,
  no_convergence,
  not_probability,
  degenerate_geodesic,
  non_positive_param,
  dimension_mismatch,
  not_spd,
  condition_violated,
  exponent_too_small,
  unbounded_metric,
};

const char* errc_name(Errc code);

// Domain and numerical failures carry a code so callers (CLI, tests) can
// dispatch on the failure kind without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hegeo
