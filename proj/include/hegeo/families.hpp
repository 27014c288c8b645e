#pragma once

#include <Eigen/Dense>

#include "hegeo/fisher_rao.hpp"
#include "hegeo/measures.hpp"

namespace hegeo {

// ---------------------------------------------------------------------------
// Translation family: all shifts of a fixed density on R^n.
//
// The induced metric on the shift parameter is the constant matrix
// A = 4 sigma^2 int grad(sqrt f) (x) grad(sqrt f) dx, evaluated here by
// central differences on the grid.  This is the classical Fisher
// normalization, int (sigma^2/f) grad f (x) grad f; the squared-distance
// expansion of He recovers A/4.
// ---------------------------------------------------------------------------

// Throws UnboundedMetric when the gradient quadrature keeps growing as the
// stencil is refined (detected by comparing the h and 2h stencils), which is
// what happens for densities with jumps.
Eigen::MatrixXd translation_metric(const GridMeasure& f, const ScaleConfig& cfg);

struct IndicatorDemo {
  double closed_form;    // 2 sigma^2 min(|y - z|, 1) at the requested shifts
  double grid_value;     // same quantity from an edge-aligned grid
  double snapped_shift;  // |y - z| after snapping to the grid resolution
};

// Squared distance between unit-interval indicators shifted by y and z in
// 1D.  The grid check snaps the shifts to the cell size so every indicator
// edge lands on a cell boundary.
IndicatorDemo translation_indicator_demo(double y, double z,
                                         const ScaleConfig& cfg);

// ---------------------------------------------------------------------------
// Poisson family on d-dimensional counting space.
// ---------------------------------------------------------------------------

double poisson_hellinger(const Eigen::VectorXd& alpha,
                         const Eigen::VectorXd& beta, const ScaleConfig& cfg);

// sigma |sqrt(alpha) - sqrt(beta)|_2; also expressible through the
// Hellinger distance as -2 sigma^2 log(1 - He^2/(2 sigma^2)).
double poisson_fr(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta,
                  const ScaleConfig& cfg);

// diag(sigma^2 / (4 alpha_i)).
Eigen::MatrixXd poisson_metric(const Eigen::VectorXd& alpha,
                               const ScaleConfig& cfg);

// Truncated realization with atoms sum(n_i) <= trunc; trunc <= 0 selects
// max(60, ceil(10 max alpha)).
DiscreteMeasure poisson_measure(const Eigen::VectorXd& alpha, int trunc = 0);

ParametricFamily poisson_family(int dim, const ScaleConfig& cfg);

// ---------------------------------------------------------------------------
// Exponential family on the positive orthant.
// ---------------------------------------------------------------------------

double exp_hellinger(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta,
                     const ScaleConfig& cfg);

// (sigma/2) |log alpha - log beta|_2.
double exp_fr(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta,
              const ScaleConfig& cfg);

// diag(sigma^2 / (4 alpha_k^2)).
Eigen::MatrixXd exp_metric(const Eigen::VectorXd& alpha,
                           const ScaleConfig& cfg);

// Density p(alpha) exp(-alpha . x) sampled on [0, L]^n (L_i from the
// reference rates so the truncated tail is negligible).
GridMeasure exp_density_grid(const Eigen::VectorXd& alpha,
                             const Eigen::VectorXd& box_lengths,
                             int cells_per_axis);

// Grid-backed family around a reference rate vector: rates may vary within
// [0.5, 1.6] x alpha_ref componentwise (the realization box is fixed per
// family, so all realizations stay comparable).
ParametricFamily exp_family(const Eigen::VectorXd& alpha_ref,
                            int cells_per_axis, const ScaleConfig& cfg);

// Quadrature cross-check of the closed-form distance, two resolutions with
// Richardson extrapolation of the squared distance.
double exp_hellinger_quadrature(const Eigen::VectorXd& alpha,
                                const Eigen::VectorXd& beta,
                                int cells_per_axis, const ScaleConfig& cfg);

// ---------------------------------------------------------------------------
// Full simplex over a 3-point space, for comparing the numeric intrinsic
// distance with the closed spherical formula.
// ---------------------------------------------------------------------------

ParametricFamily simplex3_family(const ScaleConfig& cfg);

}  // namespace hegeo
