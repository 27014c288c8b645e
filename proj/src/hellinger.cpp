#include "hegeo/hellinger.hpp"

#include <cmath>
#include <limits>

#include "hegeo/numeric_util.hpp"

namespace hegeo {

namespace {

double affinity_weight(double w0, double w1) {
  if (weight_is_zero(w0) || weight_is_zero(w1)) return 0.0;
  return std::sqrt(w0 * w1);
}

double alpha_weight(double w0, double w1, double alpha) {
  if (weight_is_zero(w0) || weight_is_zero(w1)) return 0.0;
  return std::pow(w0, alpha) * std::pow(w1, 1.0 - alpha);
}

double geodesic_weight(double w0, double w1, double s) {
  double f = (1.0 - s) * std::sqrt(w0) + s * std::sqrt(w1);
  return f * f;
}

// He^2 in the difference form sigma^2 sum (sqrt(w1) - sqrt(w0))^2, which is
// free of the cancellation the mass-minus-affinity form suffers for nearby
// measures.  `unit` is the mass carried by one entry (cell volume on grids).
double squared_distance_terms(std::span<const double> w0,
                              std::span<const double> w1, double unit,
                              double sigma, bool discrete) {
  std::vector<double> terms(w0.size());
  for (std::size_t i = 0; i < w0.size(); ++i) {
    double d = std::sqrt(w1[i]) - std::sqrt(w0[i]);
    terms[i] = d * d;
  }
  double s = discrete ? sorted_sum(std::move(terms)) : neumaier_sum(terms);
  return sigma * sigma * unit * s;
}

void check_unit_interval(double s, Errc code, const char* what) {
  if (!(s >= 0.0 && s <= 1.0)) fail(code, what);
}

template <class Pointwise>
DiscreteMeasure pointwise_discrete(const DiscreteMeasure& mu0,
                                   const DiscreteMeasure& mu1, Pointwise f) {
  Aligned a = align(mu0, mu1);
  std::vector<double> w(a.labels.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = f(a.w0[i], a.w1[i]);
  return DiscreteMeasure(std::move(a.labels), std::move(w));
}

template <class Pointwise>
GridMeasure pointwise_grid(const GridMeasure& mu0, const GridMeasure& mu1,
                           Pointwise f) {
  require_same_grid(mu0, mu1);
  std::vector<double> d(mu0.cells());
  for (std::size_t i = 0; i < d.size(); ++i)
    d[i] = f(mu0.density()[i], mu1.density()[i]);
  return mu0.with_density(std::move(d));
}

template <class F>
Measure dispatch_pair(const Measure& mu0, const Measure& mu1, F&& f) {
  if (mu0.index() != mu1.index())
    fail(Errc::incompatible_support,
         "cannot combine a discrete measure with a grid measure");
  if (std::holds_alternative<DiscreteMeasure>(mu0))
    return f(std::get<DiscreteMeasure>(mu0), std::get<DiscreteMeasure>(mu1));
  return f(std::get<GridMeasure>(mu0), std::get<GridMeasure>(mu1));
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    fail(Errc::alpha_out_of_range, "alpha must lie in [0, 1]");
}

}  // namespace

DiscreteMeasure hellinger_affinity(const DiscreteMeasure& mu0,
                                   const DiscreteMeasure& mu1) {
  return pointwise_discrete(mu0, mu1, affinity_weight);
}

GridMeasure hellinger_affinity(const GridMeasure& mu0, const GridMeasure& mu1) {
  return pointwise_grid(mu0, mu1, affinity_weight);
}

Measure hellinger_affinity(const Measure& mu0, const Measure& mu1) {
  return dispatch_pair(mu0, mu1, [](const auto& a, const auto& b) -> Measure {
    return hellinger_affinity(a, b);
  });
}

DiscreteMeasure alpha_affinity(const DiscreteMeasure& mu0,
                               const DiscreteMeasure& mu1, double alpha) {
  check_alpha(alpha);
  if (alpha == 1.0) return mu0;
  if (alpha == 0.0) return mu1;
  return pointwise_discrete(
      mu0, mu1, [alpha](double a, double b) { return alpha_weight(a, b, alpha); });
}

GridMeasure alpha_affinity(const GridMeasure& mu0, const GridMeasure& mu1,
                           double alpha) {
  check_alpha(alpha);
  if (alpha == 1.0) return mu0;
  if (alpha == 0.0) return mu1;
  return pointwise_grid(
      mu0, mu1, [alpha](double a, double b) { return alpha_weight(a, b, alpha); });
}

Measure alpha_affinity(const Measure& mu0, const Measure& mu1, double alpha) {
  return dispatch_pair(mu0, mu1,
                       [alpha](const auto& a, const auto& b) -> Measure {
                         return alpha_affinity(a, b, alpha);
                       });
}

double hellinger_distance(const DiscreteMeasure& mu0, const DiscreteMeasure& mu1,
                          const ScaleConfig& cfg) {
  Aligned a = align(mu0, mu1);
  return std::sqrt(
      squared_distance_terms(a.w0, a.w1, 1.0, cfg.sigma(), true));
}

double hellinger_distance(const GridMeasure& mu0, const GridMeasure& mu1,
                          const ScaleConfig& cfg) {
  require_same_grid(mu0, mu1);
  return std::sqrt(squared_distance_terms(mu0.density(), mu1.density(),
                                          mu0.cell_volume(), cfg.sigma(),
                                          false));
}

double hellinger_distance(const Measure& mu0, const Measure& mu1,
                          const ScaleConfig& cfg) {
  if (mu0.index() != mu1.index())
    fail(Errc::incompatible_support,
         "cannot compare a discrete measure with a grid measure");
  if (std::holds_alternative<DiscreteMeasure>(mu0))
    return hellinger_distance(std::get<DiscreteMeasure>(mu0),
                              std::get<DiscreteMeasure>(mu1), cfg);
  return hellinger_distance(std::get<GridMeasure>(mu0),
                            std::get<GridMeasure>(mu1), cfg);
}

DiscreteMeasure hellinger_geodesic(const DiscreteMeasure& mu0,
                                   const DiscreteMeasure& mu1, double s) {
  check_unit_interval(s, Errc::s_out_of_range, "geodesic parameter outside [0, 1]");
  if (s == 0.0) return mu0;
  if (s == 1.0) return mu1;
  return pointwise_discrete(
      mu0, mu1, [s](double a, double b) { return geodesic_weight(a, b, s); });
}

GridMeasure hellinger_geodesic(const GridMeasure& mu0, const GridMeasure& mu1,
                               double s) {
  check_unit_interval(s, Errc::s_out_of_range, "geodesic parameter outside [0, 1]");
  if (s == 0.0) return mu0;
  if (s == 1.0) return mu1;
  return pointwise_grid(
      mu0, mu1, [s](double a, double b) { return geodesic_weight(a, b, s); });
}

Measure hellinger_geodesic(const Measure& mu0, const Measure& mu1, double s) {
  return dispatch_pair(mu0, mu1, [s](const auto& a, const auto& b) -> Measure {
    return hellinger_geodesic(a, b, s);
  });
}

double geodesic_mass(const Measure& mu0, const Measure& mu1, double s,
                     const ScaleConfig& cfg) {
  check_unit_interval(s, Errc::s_out_of_range, "geodesic parameter outside [0, 1]");
  double he = hellinger_distance(mu0, mu1, cfg);
  double m0 = total_mass(mu0);
  double m1 = total_mass(mu1);
  return (1.0 - s) * m0 + s * m1 -
         (s - s * s) * he * he / (cfg.sigma() * cfg.sigma());
}

namespace {
double average_weight(double a, double b) {
  return 0.25 * a + 0.25 * b + 0.5 * affinity_weight(a, b);
}
}  // namespace

DiscreteMeasure hellinger_average(const DiscreteMeasure& mu0,
                                  const DiscreteMeasure& mu1) {
  return pointwise_discrete(mu0, mu1, average_weight);
}

GridMeasure hellinger_average(const GridMeasure& mu0, const GridMeasure& mu1) {
  return pointwise_grid(mu0, mu1, average_weight);
}

Measure hellinger_average(const Measure& mu0, const Measure& mu1) {
  return dispatch_pair(mu0, mu1, [](const auto& a, const auto& b) -> Measure {
    return hellinger_average(a, b);
  });
}

double hellinger_quadratic_form(const DiscreteMeasure& mu,
                                const std::vector<double>& nu1,
                                const std::vector<double>& nu2,
                                const ScaleConfig& cfg) {
  if (nu1.size() != mu.size() || nu2.size() != mu.size())
    fail(Errc::dimension_mismatch,
         "signed vectors must be given on the support of mu");
  std::vector<double> terms;
  terms.reserve(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    double w = mu.weights()[i];
    if (weight_is_zero(w)) {
      if (nu1[i] != 0.0 || nu2[i] != 0.0)
        return std::numeric_limits<double>::infinity();
      continue;
    }
    terms.push_back(nu1[i] * nu2[i] / w);
  }
  return 0.25 * cfg.sigma() * cfg.sigma() * sorted_sum(std::move(terms));
}

double angle_between(const Measure& mu0, const Measure& mu1, const Measure& mu2,
                     const ScaleConfig& cfg) {
  double d01 = hellinger_distance(mu0, mu1, cfg);
  double d02 = hellinger_distance(mu0, mu2, cfg);
  if (d01 == 0.0 || d02 == 0.0)
    fail(Errc::degenerate_angle,
         "angle undefined when one of the geodesics has zero length");
  double d12 = hellinger_distance(mu1, mu2, cfg);
  double cosarg = (d01 * d01 + d02 * d02 - d12 * d12) / (2.0 * d01 * d02);
  cosarg = clamp_or_fail(cosarg, -1.0, 1.0, 1e-9, "angle cosine");
  return std::acos(cosarg);
}

double scaled_distance(double r0, double r1, const Measure& mu0,
                       const Measure& mu1, const ScaleConfig& cfg) {
  if (!(r0 >= 0.0) || !(r1 >= 0.0))
    fail(Errc::non_positive_param, "radial factors must be >= 0");
  double he2 = hellinger_distance(mu0, mu1, cfg);
  he2 *= he2;
  double s2 = cfg.sigma() * cfg.sigma();
  double value = r0 * r1 * he2 + s2 * (r0 * r0 - r0 * r1) * total_mass(mu0) +
                 s2 * (r1 * r1 - r0 * r1) * total_mass(mu1);
  return sqrt_nonneg(value, s2 * (total_mass(mu0) + total_mass(mu1)),
                     "scaled distance");
}

double product_hellinger(const Measure& nu1, const Measure& eta1,
                         const Measure& nu2, const Measure& eta2,
                         const ScaleConfig& cfg) {
  double s2 = cfg.sigma() * cfg.sigma();
  double m_nu1 = total_mass(nu1), m_eta1 = total_mass(eta1);
  double m_nu2 = total_mass(nu2), m_eta2 = total_mass(eta2);
  double he1 = hellinger_distance(nu1, eta1, cfg);
  double he2 = hellinger_distance(nu2, eta2, cfg);
  double value = s2 * (m_nu1 * m_nu2 + m_eta1 * m_eta2) -
                 0.5 * s2 * (m_nu1 + m_eta1 - he1 * he1 / s2) *
                     (m_nu2 + m_eta2 - he2 * he2 / s2);
  return sqrt_nonneg(value, s2 * (m_nu1 * m_nu2 + m_eta1 * m_eta2),
                     "product distance");
}

}  // namespace hegeo
