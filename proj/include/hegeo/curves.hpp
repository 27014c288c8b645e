#pragma once

#include <cstdint>
#include <vector>

#include "hegeo/hellinger.hpp"
#include "hegeo/measures.hpp"

namespace hegeo {

// Discrete-measure curve sampled on a strictly increasing time grid in
// [0, 1].  All states live on the merged common support.
class SampledCurve {
 public:
  SampledCurve(std::vector<double> times, std::vector<DiscreteMeasure> states);

  std::size_t samples() const noexcept { return times_.size(); }
  std::size_t atoms() const noexcept { return support_.size(); }
  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<Label>& support() const noexcept { return support_; }

  double weight(std::size_t k, std::size_t atom) const {
    return weights_[k][atom];
  }
  const std::vector<double>& weights_at(std::size_t k) const {
    return weights_[k];
  }
  DiscreteMeasure state(std::size_t k) const;

 private:
  std::vector<double> times_;
  std::vector<Label> support_;
  std::vector<std::vector<double>> weights_;  // [time][atom]
};

// Growth rates per (time, atom); entries are defined only where the state
// weight is positive.
struct GrowthField {
  std::vector<std::vector<double>> value;    // [time][atom]
  std::vector<std::vector<std::uint8_t>> defined;
};

// Growth rate of a single geodesic time slice.
struct GrowthSlice {
  std::vector<Label> labels;
  std::vector<double> value;
  std::vector<std::uint8_t> defined;
};

// Finite-difference metric speed at sample k: central in the interior,
// one-sided at the endpoints.
double metric_speed(const SampledCurve& curve, std::size_t k,
                    const ScaleConfig& cfg);

// xi(t_k, w) = (w_{k+1} - w_{k-1}) / ((t_{k+1} - t_{k-1}) w_k) where
// w_k > 0; one-sided at the endpoints, undefined at zero-weight atoms.
GrowthField growth_rate(const SampledCurve& curve);

struct SpeedIdentityRow {
  double time;
  double speed;      // finite-difference metric speed
  double rhs;        // (sigma/2) L2(mu)-norm of the growth rate
  double residual;   // |speed - rhs|
};

// Per-sample comparison of the metric speed against the growth-rate norm;
// the identity holds for 2-absolutely-continuous curves.
std::vector<SpeedIdentityRow> speed_identity_profile(const SampledCurve& curve,
                                                     const ScaleConfig& cfg);

// Max residual of the identity over interior samples.
double speed_identity_residual(const SampledCurve& curve,
                               const ScaleConfig& cfg);

// Growth rate along the geodesic from mu0 to mu1 at parameter s:
// xi = 2 (f1 - f0) / ((1-s) f0 + s f1) with f_j the root weights.
GrowthSlice geodesic_growth_rate(const DiscreteMeasure& mu0,
                                 const DiscreteMeasure& mu1, double s);

// Chord length sum_k He(mu_k, mu_{k+1}).
double curve_length(const SampledCurve& curve, const ScaleConfig& cfg);

struct DegenerateCurve {
  SampledCurve curve;
  double xi_energy;  // quadrature of the squared growth rate against the curve
};

// Two-atom curve (1-s)^g0 at one atom plus theta s^g1 at another, sampled at
// n uniform times, together with the midpoint quadrature of
// int_0^1 int xi^2 dmu_s ds.  The exact value of that integral is
// g0^2/(g0-1) + theta g1^2/(g1-1).
DegenerateCurve degenerate_example_curve(double gamma0, double gamma1,
                                         double theta, int n);

}  // namespace hegeo
