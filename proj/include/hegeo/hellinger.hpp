#pragma once

#include "hegeo/measures.hpp"

namespace hegeo {

// Geometric mean of two comparable measures, taken pointwise on the common
// support (merged atoms for discrete measures, shared grid for densities).
DiscreteMeasure hellinger_affinity(const DiscreteMeasure& mu0,
                                   const DiscreteMeasure& mu1);
GridMeasure hellinger_affinity(const GridMeasure& mu0, const GridMeasure& mu1);
Measure hellinger_affinity(const Measure& mu0, const Measure& mu1);

// Pointwise w0^alpha * w1^(1-alpha); alpha=1 returns mu0, alpha=0 returns mu1.
DiscreteMeasure alpha_affinity(const DiscreteMeasure& mu0,
                               const DiscreteMeasure& mu1, double alpha);
GridMeasure alpha_affinity(const GridMeasure& mu0, const GridMeasure& mu1,
                           double alpha);
Measure alpha_affinity(const Measure& mu0, const Measure& mu1, double alpha);

double hellinger_distance(const DiscreteMeasure& mu0, const DiscreteMeasure& mu1,
                          const ScaleConfig& cfg);
double hellinger_distance(const GridMeasure& mu0, const GridMeasure& mu1,
                          const ScaleConfig& cfg);
double hellinger_distance(const Measure& mu0, const Measure& mu1,
                          const ScaleConfig& cfg);

// Constant-speed geodesic from mu0 to mu1 evaluated at s in [0, 1],
// pointwise ((1-s) sqrt(w0) + s sqrt(w1))^2.  The endpoints are returned as
// exact copies.
DiscreteMeasure hellinger_geodesic(const DiscreteMeasure& mu0,
                                   const DiscreteMeasure& mu1, double s);
GridMeasure hellinger_geodesic(const GridMeasure& mu0, const GridMeasure& mu1,
                               double s);
Measure hellinger_geodesic(const Measure& mu0, const Measure& mu1, double s);

// Total mass along the geodesic, which is exactly quadratic in s:
// (1-s) m0 + s m1 - (s - s^2) He^2 / sigma^2.
double geodesic_mass(const Measure& mu0, const Measure& mu1, double s,
                     const ScaleConfig& cfg);

// Geodesic midpoint, mu0/4 + mu1/4 + affinity/2.
DiscreteMeasure hellinger_average(const DiscreteMeasure& mu0,
                                  const DiscreteMeasure& mu1);
GridMeasure hellinger_average(const GridMeasure& mu0, const GridMeasure& mu1);
Measure hellinger_average(const Measure& mu0, const Measure& mu1);

// Quadratic form (sigma^2/4) sum nu1 nu2 / w over the atoms of mu.  The
// signed vectors nu1, nu2 are given atom-by-atom on mu's support; a nonzero
// entry over a zero weight yields +infinity.
double hellinger_quadratic_form(const DiscreteMeasure& mu,
                                const std::vector<double>& nu1,
                                const std::vector<double>& nu2,
                                const ScaleConfig& cfg);

// Angle at mu0 between the geodesics towards mu1 and mu2, by the planar
// law of cosines.
double angle_between(const Measure& mu0, const Measure& mu1,
                     const Measure& mu2, const ScaleConfig& cfg);

// Distance between r0^2 mu0 and r1^2 mu1 from the scaling identity
// He(r0^2 mu0, r1^2 mu1)^2 = r0 r1 He^2 + sigma^2 (r0^2 - r0 r1) m0
//                                       + sigma^2 (r1^2 - r0 r1) m1.
double scaled_distance(double r0, double r1, const Measure& mu0,
                       const Measure& mu1, const ScaleConfig& cfg);

// Distance between the product measures nu1 (x) nu2 and eta1 (x) eta2,
// evaluated from the four factor masses and the two factor distances alone.
double product_hellinger(const Measure& nu1, const Measure& eta1,
                         const Measure& nu2, const Measure& eta2,
                         const ScaleConfig& cfg);

}  // namespace hegeo
