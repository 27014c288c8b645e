#pragma once

#include <Eigen/Dense>

#include "hegeo/fisher_rao.hpp"
#include "hegeo/measures.hpp"

namespace hegeo {

// Gaussian measure on R^d given by mean and SPD covariance.
class GaussianParams {
 public:
  GaussianParams(Eigen::VectorXd mean, Eigen::MatrixXd cov);

  const Eigen::VectorXd& mean() const noexcept { return mean_; }
  const Eigen::MatrixXd& cov() const noexcept { return cov_; }
  int dim() const noexcept { return static_cast<int>(mean_.size()); }

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
};

// Dual variables of the geodesic flow: a covector for the mean and a
// symmetric matrix for the covariance.
struct GaussianCotangent {
  Eigen::VectorXd xi;
  Eigen::MatrixXd Xi;
};

// Closed-form distance; the geometric-mean measure of two Gaussians is a
// multiple of a Gaussian, which makes the affinity mass explicit.
double gaussian_hellinger(const GaussianParams& g0, const GaussianParams& g1,
                          const ScaleConfig& cfg);

// Quadratic form sigma^2 (v . Sigma^-1 v + 1/2 tr(Sigma^-1 V Sigma^-1 V)) on
// tangent vectors (v, V).  This is the classical Fisher normalization; the
// squared-distance expansion of the ambient metric is one quarter of it and
// every distance in this Gaussian block is measured in the classical scale.
double gaussian_fisher_form(const GaussianParams& g, const Eigen::VectorXd& v,
                            const Eigen::MatrixXd& V, const ScaleConfig& cfg);

// Matrix of the same form in (mean, lower-triangle covariance) coordinates.
Eigen::MatrixXd gaussian_fisher_matrix(const GaussianParams& g,
                                       const ScaleConfig& cfg);

// H = (1 / (4 sigma^2)) (xi . Sigma xi + 2 tr(Sigma Xi Sigma Xi)), the dual
// quadratic form of gaussian_fisher_form; constant along geodesics.
double gaussian_hamiltonian(const GaussianParams& g, const GaussianCotangent& c,
                            const ScaleConfig& cfg);

struct GaussianDerivatives {
  Eigen::VectorXd dm;
  Eigen::MatrixXd dSigma;
  Eigen::VectorXd dxi;
  Eigen::MatrixXd dXi;
};

// Right-hand side of the geodesic system
//   m' = Sigma xi,  Sigma' = 2 Sigma Xi Sigma,
//   xi' = 0,        Xi' = -2 Xi Sigma Xi - (1/2) xi (x) xi,
// a constant rescaling (2 sigma^2) of the canonical flow of H.
GaussianDerivatives gaussian_geodesic_ode(const GaussianParams& g,
                                          const GaussianCotangent& c);

struct GaussianConserved {
  double H;
  Eigen::VectorXd xi;
  Eigen::MatrixXd J;  // Sigma Xi + (1/2) m (x) xi
};

GaussianConserved gaussian_conserved(const GaussianParams& g,
                                     const GaussianCotangent& c,
                                     const ScaleConfig& cfg);

struct GaussianState {
  GaussianParams g;
  GaussianCotangent c;
};

// Classical RK4 with fixed step; symmetry of Sigma and Xi is re-imposed
// after every step.  Returns the states at s = 0, ds, ..., 1.
std::vector<GaussianState> gaussian_flow(const GaussianParams& g0,
                                         const GaussianCotangent& c0,
                                         double ds = 1e-3);

struct GaussianBvpResult {
  double distance;
  GaussianCotangent c0;  // shooting covector at s = 0
};

struct GaussianBvpOpts {
  double ds = 1e-3;
  double target_tol = 1e-9;
  int max_newton = 60;
};

// Geodesic boundary-value problem by Newton shooting on the flow; the
// distance is the (constant) speed of the connecting trajectory.
GaussianBvpResult gaussian_fr_bvp(const GaussianParams& g0,
                                  const GaussianParams& g1,
                                  const ScaleConfig& cfg,
                                  const GaussianBvpOpts& opts = {});

// Hyperbolic kernel of the one-dimensional distance:
// M(D, L) = sqrt(2) log((1/8)(sqrt(D + 2(L^{1/4}+L^{-1/4})^2)
//                            + sqrt(D + 2(L^{1/4}-L^{-1/4})^2))^2);
// satisfies M(D, L) = M(D, 1/L) and M(0, L) = |log L| / sqrt(2).
double gaussian_M(double Delta, double Lambda);

// d = 1 closed form sigma M((m1-m0)^2 / sqrt(S0 S1), S1/S0).
double gaussian_fr_1d(const GaussianParams& g0, const GaussianParams& g1,
                      const ScaleConfig& cfg);

// Same-center closed form sqrt((sigma^2/2) sum log^2 Lambda_n) with
// Lambda_n the eigenvalues of S0^{-1/2} S1 S0^{-1/2}.
double gaussian_fr_same_center(const Eigen::MatrixXd& Sigma0,
                               const Eigen::MatrixXd& Sigma1,
                               const ScaleConfig& cfg);

// Closed form when m1 - m0 is a common eigendirection of both covariances:
// one 1D block through M plus same-center blocks for the remaining
// eigenvalues.  Throws ConditionViolated when the direction is not a common
// eigendirection to 1e-8 relative.
double gaussian_fr_eigvec_case(const GaussianParams& g0,
                               const GaussianParams& g1,
                               const ScaleConfig& cfg);

// Density sampled on the given box (origin/lengths per axis).
GridMeasure gaussian_density_grid(const GaussianParams& g,
                                  const Eigen::VectorXd& box_lo,
                                  const Eigen::VectorXd& box_lengths,
                                  int cells_per_axis);

// Quadrature cross-check of the closed-form distance on a shared box with
// 8-standard-deviation margins; two resolutions, Richardson-extrapolated.
double gaussian_hellinger_quadrature(const GaussianParams& g0,
                                     const GaussianParams& g1,
                                     int cells_per_axis, const ScaleConfig& cfg);

// Grid-backed family in (mean, lower-triangle covariance) coordinates.  The
// box is fixed per family so realizations stay comparable; the closed-form
// metric is the ambient-induced one (one quarter of the classical form).
ParametricFamily gaussian_grid_family(int dim, double mean_halfwidth,
                                      double sigma_min, double sigma_max,
                                      int cells_per_axis,
                                      const ScaleConfig& cfg);

// (mean, lower-triangle covariance) packing used by the grid family.
Eigen::VectorXd gaussian_pack(const GaussianParams& g);
GaussianParams gaussian_unpack(const Eigen::VectorXd& p, int dim);

}  // namespace hegeo
