#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hegeo/hellinger.hpp"
#include "hegeo/measures.hpp"

namespace hegeo {

// Finite-dimensional family of measures.  `realize` must produce pairwise
// comparable measures over the whole domain.  When `closed_form_metric` is
// present it is the metric induced by the ambient distance (the limit of
// He(realize(p), realize(p+eps v))^2 / eps^2); otherwise the
// finite-difference estimate is used.
struct ParametricFamily {
  std::string name;
  int param_dim = 0;
  std::function<bool(const Eigen::VectorXd&)> in_domain;
  std::function<Measure(const Eigen::VectorXd&)> realize;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> closed_form_metric;
  // Optional hook pulling a point back into the domain (used to repair
  // straight-segment initial paths).
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> project;
};

// Metric tensor at p recovered from squared distances: symmetric
// three-point differences in each probe direction with one Richardson step
// (eps, eps/2).  eps <= 0 selects the default 1e-4 (1 + |p|).
Eigen::MatrixXd fisher_matrix_fd(const ParametricFamily& family,
                                 const Eigen::VectorXd& p, double eps,
                                 const ScaleConfig& cfg);

// Length of a sampled parameter path under the family metric, midpoint rule.
double path_length_metric(const ParametricFamily& family,
                          const std::vector<Eigen::VectorXd>& path,
                          const ScaleConfig& cfg);

// Same path measured by ambient chords between realized measures.
double path_length_chords(const ParametricFamily& family,
                          const std::vector<Eigen::VectorXd>& path,
                          const ScaleConfig& cfg);

struct FrNumericOpts {
  int interior_points = 64;
  int max_iters = 10000;
  double tol = 1e-10;  // relative energy decrease at which to stop
};

struct FrNumericResult {
  double distance = 0.0;
  double energy = 0.0;
  int iterations = 0;
  std::vector<Eigen::VectorXd> path;
};

// Geodesic distance inside the family: minimizes the discrete path energy
// sum_k (p_{k+1}-p_k) . G(midpoint) (p_{k+1}-p_k) / ds over the interior
// control points of a uniform grid.  Deterministic for fixed options.
FrNumericResult fr_distance_numeric(const ParametricFamily& family,
                                    const Eigen::VectorXd& p0,
                                    const Eigen::VectorXd& p1,
                                    const ScaleConfig& cfg,
                                    const FrNumericOpts& opts = {});

// Intrinsic distance on probability measures, 2 sigma asin(He / (2 sigma)).
double bhattacharyya_distance(const Measure& nu0, const Measure& nu1,
                              const ScaleConfig& cfg);

// Constant-speed geodesic between probability measures: a mass-one
// reweighting of the ambient geodesic under a sphere-angle reparametrization.
Measure spherical_geodesic(const Measure& nu0, const Measure& nu1, double s,
                           const ScaleConfig& cfg);

// Point r^2 nu of the cone over a set of probability measures.
struct ConePoint {
  double r = 0.0;
  Measure base;
};

ConePoint make_cone_point(double r, Measure base);

// Cone distance sigma^2 (r0^2 + r1^2 - 2 r0 r1 cos_pi(base_fr / sigma)),
// where cos_pi truncates the angle at pi.
double cone_distance(const ConePoint& a, const ConePoint& b, double base_fr,
                     const ScaleConfig& cfg);

// Geodesic in the cone.  For base separation below sigma pi the curve rides
// a base geodesic with a radial profile; at or above sigma pi it runs
// through the apex along the two rays.
Measure cone_geodesic(const ConePoint& a, const ConePoint& b,
                      const std::function<Measure(double)>& base_geodesic,
                      double base_fr, double s, const ScaleConfig& cfg);

// Distance in a product of probability families: sqrt(fr1^2 + fr2^2).
double product_fr(double fr1, double fr2);

}  // namespace hegeo
