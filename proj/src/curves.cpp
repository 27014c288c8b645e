#include "hegeo/curves.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hegeo/numeric_util.hpp"

namespace hegeo {

SampledCurve::SampledCurve(std::vector<double> times,
                           std::vector<DiscreteMeasure> states)
    : times_(std::move(times)) {
  if (times_.size() < 2) throw std::invalid_argument("curve needs >= 2 samples");
  if (times_.size() != states.size())
    throw std::invalid_argument("times/states length mismatch");
  for (std::size_t k = 0; k < times_.size(); ++k) {
    if (!(times_[k] >= 0.0 && times_[k] <= 1.0))
      throw std::invalid_argument("curve times must lie in [0, 1]");
    if (k && !(times_[k] > times_[k - 1]))
      throw std::invalid_argument("curve times must be strictly increasing");
  }
  std::set<Label> merged;
  for (const auto& st : states)
    merged.insert(st.support().begin(), st.support().end());
  support_.assign(merged.begin(), merged.end());
  weights_.resize(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    weights_[k].resize(support_.size());
    for (std::size_t a = 0; a < support_.size(); ++a)
      weights_[k][a] = states[k].weight_of(support_[a]);
  }
}

DiscreteMeasure SampledCurve::state(std::size_t k) const {
  return DiscreteMeasure(support_, weights_[k]);
}

namespace {

// He between two aligned weight rows; avoids rebuilding measures on hot paths.
double row_distance(const std::vector<double>& w0, const std::vector<double>& w1,
                    const ScaleConfig& cfg) {
  std::vector<double> terms(w0.size());
  for (std::size_t i = 0; i < w0.size(); ++i) {
    double d = std::sqrt(w1[i]) - std::sqrt(w0[i]);
    terms[i] = d * d;
  }
  return cfg.sigma() * std::sqrt(sorted_sum(std::move(terms)));
}

}  // namespace

double metric_speed(const SampledCurve& curve, std::size_t k,
                    const ScaleConfig& cfg) {
  std::size_t n = curve.samples();
  if (k >= n) throw std::out_of_range("sample index out of range");
  std::size_t lo = (k == 0) ? 0 : k - 1;
  std::size_t hi = (k + 1 == n) ? k : k + 1;
  double dt = curve.times()[hi] - curve.times()[lo];
  return row_distance(curve.weights_at(lo), curve.weights_at(hi), cfg) / dt;
}

GrowthField growth_rate(const SampledCurve& curve) {
  std::size_t n = curve.samples();
  if (n < 3) throw std::invalid_argument("growth rate needs >= 3 samples");
  GrowthField out;
  out.value.assign(n, std::vector<double>(curve.atoms(), 0.0));
  out.defined.assign(n, std::vector<std::uint8_t>(curve.atoms(), 0));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t lo = (k == 0) ? 0 : k - 1;
    std::size_t hi = (k + 1 == n) ? k : k + 1;
    double dt = curve.times()[hi] - curve.times()[lo];
    for (std::size_t a = 0; a < curve.atoms(); ++a) {
      double w = curve.weight(k, a);
      if (weight_is_zero(w)) continue;
      out.value[k][a] = (curve.weight(hi, a) - curve.weight(lo, a)) / (dt * w);
      out.defined[k][a] = 1;
    }
  }
  return out;
}

std::vector<SpeedIdentityRow> speed_identity_profile(const SampledCurve& curve,
                                                     const ScaleConfig& cfg) {
  GrowthField xi = growth_rate(curve);
  std::vector<SpeedIdentityRow> rows;
  rows.reserve(curve.samples());
  for (std::size_t k = 0; k < curve.samples(); ++k) {
    double speed = metric_speed(curve, k, cfg);
    std::vector<double> terms;
    terms.reserve(curve.atoms());
    for (std::size_t a = 0; a < curve.atoms(); ++a) {
      if (!xi.defined[k][a]) continue;  // zero-weight atoms carry no mass
      double v = xi.value[k][a];
      terms.push_back(v * v * curve.weight(k, a));
    }
    double rhs = 0.5 * cfg.sigma() * std::sqrt(sorted_sum(std::move(terms)));
    rows.push_back({curve.times()[k], speed, rhs, std::abs(speed - rhs)});
  }
  return rows;
}

double speed_identity_residual(const SampledCurve& curve,
                               const ScaleConfig& cfg) {
  auto rows = speed_identity_profile(curve, cfg);
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < rows.size(); ++k)
    worst = std::max(worst, rows[k].residual);
  return worst;
}

GrowthSlice geodesic_growth_rate(const DiscreteMeasure& mu0,
                                 const DiscreteMeasure& mu1, double s) {
  if (!(s >= 0.0 && s <= 1.0))
    fail(Errc::s_out_of_range, "geodesic parameter outside [0, 1]");
  Aligned a = align(mu0, mu1);
  GrowthSlice out;
  out.labels = std::move(a.labels);
  out.value.assign(out.labels.size(), 0.0);
  out.defined.assign(out.labels.size(), 0);
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    double f0 = weight_is_zero(a.w0[i]) ? 0.0 : std::sqrt(a.w0[i]);
    double f1 = weight_is_zero(a.w1[i]) ? 0.0 : std::sqrt(a.w1[i]);
    double denom = (1.0 - s) * f0 + s * f1;
    if (denom <= 0.0) continue;
    out.value[i] = 2.0 * (f1 - f0) / denom;
    out.defined[i] = 1;
  }
  return out;
}

double curve_length(const SampledCurve& curve, const ScaleConfig& cfg) {
  std::vector<double> chords(curve.samples() - 1);
  for (std::size_t k = 0; k + 1 < curve.samples(); ++k)
    chords[k] = row_distance(curve.weights_at(k), curve.weights_at(k + 1), cfg);
  return neumaier_sum(chords);
}

DegenerateCurve degenerate_example_curve(double gamma0, double gamma1,
                                         double theta, int n) {
  if (!(gamma0 > 3.0) || !(gamma1 > 3.0))
    fail(Errc::exponent_too_small, "exponents must exceed 3");
  if (!(theta >= 0.0)) fail(Errc::non_positive_param, "theta must be >= 0");
  if (n < 2) throw std::invalid_argument("need >= 2 samples");

  Label w0 = std::string("omega0");
  Label w1 = std::string("omega1");
  std::vector<double> times(static_cast<std::size_t>(n));
  std::vector<DiscreteMeasure> states;
  states.reserve(times.size());
  for (int k = 0; k < n; ++k) {
    double s = static_cast<double>(k) / (n - 1);
    times[static_cast<std::size_t>(k)] = s;
    double a0 = std::pow(1.0 - s, gamma0);
    double a1 = theta * std::pow(s, gamma1);
    states.push_back(DiscreteMeasure({w0, w1}, {a0, a1}));
  }

  // Midpoint quadrature of int_0^1 xi^2 dmu_s ds with the closed-form rates
  // xi_j = a_j'/a_j, so the integrand is g0^2 (1-s)^(g0-2) + theta g1^2 s^(g1-2).
  std::vector<double> terms(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double s = (k + 0.5) / n;
    terms[static_cast<std::size_t>(k)] =
        gamma0 * gamma0 * std::pow(1.0 - s, gamma0 - 2.0) +
        theta * gamma1 * gamma1 * std::pow(s, gamma1 - 2.0);
  }
  double energy = neumaier_sum(terms) / n;

  return {SampledCurve(std::move(times), std::move(states)), energy};
}

}  // namespace hegeo
