#include "hegeo/gaussian.hpp"

#include <cmath>

#include "hegeo/numeric_util.hpp"

namespace hegeo {

namespace {

Eigen::MatrixXd sym(const Eigen::MatrixXd& x) {
  return 0.5 * (x + x.transpose());
}

void check_symmetric(const Eigen::MatrixXd& x, const char* who) {
  double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  if ((x - x.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    fail(Errc::not_spd, std::string(who) + ": matrix is not symmetric");
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> spd_eigen(
    const Eigen::MatrixXd& x, const char* who) {
  check_symmetric(x, who);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym(x));
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
    fail(Errc::not_spd, std::string(who) + ": matrix is not positive definite");
  return es;
}

Eigen::MatrixXd spd_apply(const Eigen::MatrixXd& x, double (*f)(double),
                          const char* who) {
  auto es = spd_eigen(x, who);
  Eigen::VectorXd d = es.eigenvalues();
  for (Eigen::Index i = 0; i < d.size(); ++i) d[i] = f(d[i]);
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& x) {
  return spd_apply(x, [](double t) { return std::sqrt(t); }, "spd_sqrt");
}

Eigen::MatrixXd spd_power(const Eigen::MatrixXd& x, double s) {
  auto es = spd_eigen(x, "spd_power");
  Eigen::VectorXd d = es.eigenvalues();
  for (Eigen::Index i = 0; i < d.size(); ++i) d[i] = std::pow(d[i], s);
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::MatrixXd spd_log(const Eigen::MatrixXd& x) {
  return spd_apply(x, [](double t) { return std::log(t); }, "spd_log");
}

void check_same_dim(const GaussianParams& a, const GaussianParams& b) {
  if (a.dim() != b.dim())
    fail(Errc::dimension_mismatch, "Gaussian dimensions differ");
}

}  // namespace

GaussianParams::GaussianParams(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
  if (cov_.rows() != cov_.cols() || cov_.rows() != mean_.size())
    fail(Errc::dimension_mismatch, "mean/covariance dimensions disagree");
  spd_eigen(cov_, "GaussianParams");
  cov_ = sym(cov_);
}

double gaussian_hellinger(const GaussianParams& g0, const GaussianParams& g1,
                          const ScaleConfig& cfg) {
  check_same_dim(g0, g1);
  Eigen::MatrixXd mid = 0.5 * (g0.cov() + g1.cov());
  Eigen::LLT<Eigen::MatrixXd> llt0(g0.cov()), llt1(g1.cov()), lltm(mid);
  if (lltm.info() != Eigen::Success)
    fail(Errc::not_spd, "mid covariance not positive definite");
  auto logdet = [](const Eigen::LLT<Eigen::MatrixXd>& llt) {
    double ld = 0.0;
    for (Eigen::Index i = 0; i < llt.matrixL().rows(); ++i)
      ld += std::log(llt.matrixL()(i, i));
    return 2.0 * ld;
  };
  Eigen::VectorXd dm = g1.mean() - g0.mean();
  double quad = dm.dot(lltm.solve(dm));
  double log_aff = 0.25 * (logdet(llt0) + logdet(llt1)) - 0.5 * logdet(lltm) -
                   0.125 * quad;
  double s2 = cfg.sigma() * cfg.sigma();
  return std::sqrt(2.0 * s2 * (-std::expm1(log_aff)));
}

double gaussian_fisher_form(const GaussianParams& g, const Eigen::VectorXd& v,
                            const Eigen::MatrixXd& V, const ScaleConfig& cfg) {
  if (v.size() != g.dim() || V.rows() != g.dim() || V.cols() != g.dim())
    fail(Errc::dimension_mismatch, "tangent dimensions disagree");
  Eigen::LLT<Eigen::MatrixXd> llt(g.cov());
  Eigen::VectorXd iv = llt.solve(v);
  Eigen::MatrixXd iV = llt.solve(V);
  double s2 = cfg.sigma() * cfg.sigma();
  return s2 * (v.dot(iv) + 0.5 * (iV * iV).trace());
}

Eigen::VectorXd gaussian_pack(const GaussianParams& g) {
  int d = g.dim();
  Eigen::VectorXd p(d + d * (d + 1) / 2);
  p.head(d) = g.mean();
  int k = d;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) p[k++] = g.cov()(i, j);
  return p;
}

GaussianParams gaussian_unpack(const Eigen::VectorXd& p, int dim) {
  if (p.size() != dim + dim * (dim + 1) / 2)
    fail(Errc::dimension_mismatch, "packed parameter has wrong length");
  Eigen::VectorXd m = p.head(dim);
  Eigen::MatrixXd s(dim, dim);
  int k = dim;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j) { s(i, j) = p[k]; s(j, i) = p[k]; ++k; }
  return GaussianParams(std::move(m), std::move(s));
}

Eigen::MatrixXd gaussian_fisher_matrix(const GaussianParams& g,
                                       const ScaleConfig& cfg) {
  int d = g.dim();
  int n = d + d * (d + 1) / 2;
  auto tangent = [&](const Eigen::VectorXd& u) {
    Eigen::VectorXd v = u.head(d);
    Eigen::MatrixXd V(d, d);
    int k = d;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j <= i; ++j) { V(i, j) = u[k]; V(j, i) = u[k]; ++k; }
    return std::pair{v, V};
  };
  auto q = [&](const Eigen::VectorXd& u) {
    auto [v, V] = tangent(u);
    return gaussian_fisher_form(g, v, V, cfg);
  };
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i) G(i, i) = q(Eigen::VectorXd::Unit(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double s = q(Eigen::VectorXd::Unit(n, i) + Eigen::VectorXd::Unit(n, j));
      double m = q(Eigen::VectorXd::Unit(n, i) - Eigen::VectorXd::Unit(n, j));
      G(i, j) = G(j, i) = 0.25 * (s - m);
    }
  return G;
}

double gaussian_hamiltonian(const GaussianParams& g, const GaussianCotangent& c,
                            const ScaleConfig& cfg) {
  if (c.xi.size() != g.dim() || c.Xi.rows() != g.dim() || c.Xi.cols() != g.dim())
    fail(Errc::dimension_mismatch, "cotangent dimensions disagree");
  const Eigen::MatrixXd& S = g.cov();
  double s2 = cfg.sigma() * cfg.sigma();
  return (c.xi.dot(S * c.xi) + 2.0 * (S * c.Xi * S * c.Xi).trace()) / (4.0 * s2);
}

GaussianDerivatives gaussian_geodesic_ode(const GaussianParams& g,
                                          const GaussianCotangent& c) {
  if (c.xi.size() != g.dim() || c.Xi.rows() != g.dim() || c.Xi.cols() != g.dim())
    fail(Errc::dimension_mismatch, "cotangent dimensions disagree");
  const Eigen::MatrixXd& S = g.cov();
  GaussianDerivatives d;
  d.dm = S * c.xi;
  d.dSigma = sym(2.0 * S * c.Xi * S);
  d.dxi = Eigen::VectorXd::Zero(g.dim());
  d.dXi = sym(-2.0 * c.Xi * S * c.Xi - 0.5 * c.xi * c.xi.transpose());
  return d;
}

GaussianConserved gaussian_conserved(const GaussianParams& g,
                                     const GaussianCotangent& c,
                                     const ScaleConfig& cfg) {
  GaussianConserved out;
  out.H = gaussian_hamiltonian(g, c, cfg);
  out.xi = c.xi;
  out.J = g.cov() * c.Xi + 0.5 * g.mean() * c.xi.transpose();
  return out;
}

namespace {

struct RawState {
  Eigen::VectorXd m;
  Eigen::MatrixXd S;
  Eigen::VectorXd xi;
  Eigen::MatrixXd Xi;
};

RawState ode_rhs(const RawState& y) {
  RawState d;
  d.m = y.S * y.xi;
  d.S = sym(2.0 * y.S * y.Xi * y.S);
  d.xi = Eigen::VectorXd::Zero(y.m.size());
  d.Xi = sym(-2.0 * y.Xi * y.S * y.Xi - 0.5 * y.xi * y.xi.transpose());
  return d;
}

RawState axpy(const RawState& y, double a, const RawState& d) {
  return {y.m + a * d.m, y.S + a * d.S, y.xi + a * d.xi, y.Xi + a * d.Xi};
}

void rk4_step(RawState& y, double h) {
  RawState k1 = ode_rhs(y);
  RawState k2 = ode_rhs(axpy(y, 0.5 * h, k1));
  RawState k3 = ode_rhs(axpy(y, 0.5 * h, k2));
  RawState k4 = ode_rhs(axpy(y, h, k3));
  y.m += (h / 6.0) * (k1.m + 2.0 * k2.m + 2.0 * k3.m + k4.m);
  y.S += (h / 6.0) * (k1.S + 2.0 * k2.S + 2.0 * k3.S + k4.S);
  y.xi += (h / 6.0) * (k1.xi + 2.0 * k2.xi + 2.0 * k3.xi + k4.xi);
  y.Xi += (h / 6.0) * (k1.Xi + 2.0 * k2.Xi + 2.0 * k3.Xi + k4.Xi);
  y.S = sym(y.S);
  y.Xi = sym(y.Xi);
}

RawState flow_final(RawState y, double ds) {
  auto steps = static_cast<int>(std::llround(1.0 / ds));
  double h = 1.0 / steps;
  for (int k = 0; k < steps; ++k) rk4_step(y, h);
  return y;
}

}  // namespace

std::vector<GaussianState> gaussian_flow(const GaussianParams& g0,
                                         const GaussianCotangent& c0,
                                         double ds) {
  if (c0.xi.size() != g0.dim() || c0.Xi.rows() != g0.dim())
    fail(Errc::dimension_mismatch, "cotangent dimensions disagree");
  auto steps = static_cast<int>(std::llround(1.0 / ds));
  double h = 1.0 / steps;
  RawState y{g0.mean(), g0.cov(), c0.xi, sym(c0.Xi)};
  std::vector<GaussianState> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  out.push_back({GaussianParams(y.m, y.S), {y.xi, y.Xi}});
  for (int k = 0; k < steps; ++k) {
    rk4_step(y, h);
    out.push_back({GaussianParams(y.m, y.S), {y.xi, y.Xi}});
  }
  return out;
}

namespace {

// Shooting unknowns are (xi, lower triangle of Xi).
Eigen::VectorXd pack_cotangent(const Eigen::VectorXd& xi,
                               const Eigen::MatrixXd& Xi) {
  int d = static_cast<int>(xi.size());
  Eigen::VectorXd x(d + d * (d + 1) / 2);
  x.head(d) = xi;
  int k = d;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) x[k++] = Xi(i, j);
  return x;
}

GaussianCotangent unpack_cotangent(const Eigen::VectorXd& x, int d) {
  GaussianCotangent c;
  c.xi = x.head(d);
  c.Xi.resize(d, d);
  int k = d;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) { c.Xi(i, j) = x[k]; c.Xi(j, i) = x[k]; ++k; }
  return c;
}

Eigen::VectorXd shoot_residual(const GaussianParams& g0,
                               const Eigen::VectorXd& x,
                               const Eigen::VectorXd& m1,
                               const Eigen::MatrixXd& S1, double ds) {
  int d = g0.dim();
  GaussianCotangent c = unpack_cotangent(x, d);
  RawState yf = flow_final({g0.mean(), g0.cov(), c.xi, c.Xi}, ds);
  Eigen::VectorXd r(x.size());
  r.head(d) = yf.m - m1;
  int k = d;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) r[k++] = yf.S(i, j) - S1(i, j);
  return r;
}

// Newton with finite-difference Jacobian and simple damping.  Returns true
// on convergence of the scaled residual.
bool newton_shoot(const GaussianParams& g0, const Eigen::VectorXd& m1,
                  const Eigen::MatrixXd& S1, double ds, double tol,
                  int max_iter, Eigen::VectorXd* x) {
  const auto n = x->size();
  double scale = 1.0 + std::max(m1.cwiseAbs().maxCoeff(),
                                S1.cwiseAbs().maxCoeff());
  Eigen::VectorXd r = shoot_residual(g0, *x, m1, S1, ds);
  double err = r.cwiseAbs().maxCoeff() / scale;
  for (int it = 0; it < max_iter && err > tol; ++it) {
    Eigen::MatrixXd J(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      double h = 1e-6 * (1.0 + std::abs((*x)[j]));
      Eigen::VectorXd xp = *x, xm = *x;
      xp[j] += h;
      xm[j] -= h;
      J.col(j) = (shoot_residual(g0, xp, m1, S1, ds) -
                  shoot_residual(g0, xm, m1, S1, ds)) /
                 (2.0 * h);
    }
    Eigen::VectorXd dx = J.fullPivLu().solve(-r);
    bool moved = false;
    for (double t = 1.0; t > 1e-6; t *= 0.5) {
      Eigen::VectorXd xt = *x + t * dx;
      Eigen::VectorXd rt = shoot_residual(g0, xt, m1, S1, ds);
      double et = rt.cwiseAbs().maxCoeff() / scale;
      if (et < err * (1.0 - 1e-4 * t)) {
        *x = xt;
        r = rt;
        err = et;
        moved = true;
        break;
      }
    }
    if (!moved) return false;
  }
  return err <= tol;
}

GaussianParams interpolate_target(const GaussianParams& g0,
                                  const GaussianParams& g1, double t) {
  Eigen::MatrixXd root = spd_sqrt(g0.cov());
  Eigen::MatrixXd iroot = spd_power(g0.cov(), -0.5);
  Eigen::MatrixXd w = sym(iroot * g1.cov() * iroot);
  Eigen::MatrixXd st = sym(root * spd_power(w, t) * root);
  return GaussianParams(g0.mean() + t * (g1.mean() - g0.mean()), st);
}

}  // namespace

GaussianBvpResult gaussian_fr_bvp(const GaussianParams& g0,
                                  const GaussianParams& g1,
                                  const ScaleConfig& cfg,
                                  const GaussianBvpOpts& opts) {
  check_same_dim(g0, g1);
  int d = g0.dim();

  // Same-center seed: exact when the means agree, a good start otherwise.
  Eigen::MatrixXd iroot = spd_power(g0.cov(), -0.5);
  Eigen::MatrixXd w = sym(iroot * g1.cov() * iroot);
  Eigen::MatrixXd Xi0 = sym(0.5 * iroot * spd_log(w) * iroot);
  Eigen::VectorXd xi0 =
      Eigen::LLT<Eigen::MatrixXd>(g0.cov()).solve(g1.mean() - g0.mean());
  Eigen::VectorXd x = pack_cotangent(xi0, Xi0);

  if (!newton_shoot(g0, g1.mean(), g1.cov(), opts.ds, opts.target_tol,
                    opts.max_newton, &x)) {
    // Continuation: walk the target along an interpolating curve, warm
    // starting each stage from the rescaled previous covector.
    bool done = false;
    for (int levels = 2; levels <= 16 && !done; levels *= 2) {
      x = pack_cotangent(xi0, Xi0) / levels;
      done = true;
      for (int k = 1; k <= levels; ++k) {
        double t = static_cast<double>(k) / levels;
        GaussianParams gt = interpolate_target(g0, g1, t);
        if (k > 1) x *= t / (t - 1.0 / levels);
        if (!newton_shoot(g0, gt.mean(), gt.cov(), opts.ds, opts.target_tol,
                          opts.max_newton, &x)) {
          done = false;
          break;
        }
      }
    }
    if (!done)
      fail(Errc::no_convergence, "geodesic shooting did not converge");
  }

  GaussianCotangent c = unpack_cotangent(x, d);
  Eigen::VectorXd v = g0.cov() * c.xi;
  Eigen::MatrixXd V = sym(2.0 * g0.cov() * c.Xi * g0.cov());
  return {std::sqrt(gaussian_fisher_form(g0, v, V, cfg)), c};
}

double gaussian_M(double Delta, double Lambda) {
  if (!(Delta >= 0.0))
    fail(Errc::non_positive_param, "M requires Delta >= 0");
  if (!(Lambda > 0.0)) fail(Errc::non_positive_param, "M requires Lambda > 0");
  double a = std::pow(Lambda, 0.25);
  double b = 1.0 / a;
  double plus = a + b, minus = a - b;
  double root = std::sqrt(Delta + 2.0 * plus * plus) +
                std::sqrt(Delta + 2.0 * minus * minus);
  return std::sqrt(2.0) * std::log(0.125 * root * root);
}

double gaussian_fr_1d(const GaussianParams& g0, const GaussianParams& g1,
                      const ScaleConfig& cfg) {
  check_same_dim(g0, g1);
  if (g0.dim() != 1)
    fail(Errc::dimension_mismatch, "closed form is one-dimensional");
  double s0 = g0.cov()(0, 0), s1 = g1.cov()(0, 0);
  double dm = g1.mean()[0] - g0.mean()[0];
  return cfg.sigma() * gaussian_M(dm * dm / std::sqrt(s0 * s1), s1 / s0);
}

double gaussian_fr_same_center(const Eigen::MatrixXd& Sigma0,
                               const Eigen::MatrixXd& Sigma1,
                               const ScaleConfig& cfg) {
  spd_eigen(Sigma0, "gaussian_fr_same_center");
  spd_eigen(Sigma1, "gaussian_fr_same_center");
  if (Sigma0.rows() != Sigma1.rows())
    fail(Errc::dimension_mismatch, "covariance dimensions disagree");
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(sym(Sigma1),
                                                                sym(Sigma0));
  double q = 0.0;
  for (Eigen::Index i = 0; i < ges.eigenvalues().size(); ++i) {
    double l = std::log(ges.eigenvalues()[i]);
    q += l * l;
  }
  return cfg.sigma() * std::sqrt(0.5 * q);
}

double gaussian_fr_eigvec_case(const GaussianParams& g0,
                               const GaussianParams& g1,
                               const ScaleConfig& cfg) {
  check_same_dim(g0, g1);
  Eigen::VectorXd dm = g1.mean() - g0.mean();
  if (dm.norm() == 0.0)
    return gaussian_fr_same_center(g0.cov(), g1.cov(), cfg);

  Eigen::VectorXd u0 = Eigen::LLT<Eigen::MatrixXd>(g0.cov()).solve(dm);
  Eigen::VectorXd u1 = Eigen::LLT<Eigen::MatrixXd>(g1.cov()).solve(dm);
  double lam = u0.dot(u1) / u1.squaredNorm();
  if ((u0 - lam * u1).norm() > 1e-8 * u0.norm())
    fail(Errc::condition_violated,
         "mean shift is not a common eigendirection of the covariances");

  Eigen::MatrixXd iroot = spd_power(g0.cov(), -0.5);
  Eigen::MatrixXd w = sym(iroot * g1.cov() * iroot);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w);
  Eigen::VectorXd v = iroot * dm;
  v.normalize();

  // Block along the shift direction gets the 1D kernel; the rest is the
  // same-center sum.
  Eigen::Index best = 0;
  double best_align = -1.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double a = std::abs(es.eigenvectors().col(i).dot(v));
    if (a > best_align) { best_align = a; best = i; }
  }
  double lambda1 = es.eigenvalues()[best];
  double delta1 = (iroot * dm).norm() *
                  (spd_power(g1.cov(), -0.5) * dm).norm();
  double s2 = cfg.sigma() * cfg.sigma();
  double m1 = gaussian_M(delta1, lambda1);
  double q = s2 * m1 * m1;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (i == best) continue;
    double l = std::log(es.eigenvalues()[i]);
    q += 0.5 * s2 * l * l;
  }
  return std::sqrt(q);
}

GridMeasure gaussian_density_grid(const GaussianParams& g,
                                  const Eigen::VectorXd& box_lo,
                                  const Eigen::VectorXd& box_lengths,
                                  int cells_per_axis) {
  int d = g.dim();
  if (box_lo.size() != d || box_lengths.size() != d)
    fail(Errc::dimension_mismatch, "box dimensions disagree");
  std::vector<double> origin(static_cast<std::size_t>(d));
  std::vector<double> spacing(static_cast<std::size_t>(d));
  std::vector<std::int64_t> shape(static_cast<std::size_t>(d), cells_per_axis);
  std::size_t cells = 1;
  for (int a = 0; a < d; ++a) {
    origin[static_cast<std::size_t>(a)] = box_lo[a];
    spacing[static_cast<std::size_t>(a)] = box_lengths[a] / cells_per_axis;
    cells *= static_cast<std::size_t>(cells_per_axis);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(g.cov());
  double logdet = 0.0;
  for (int i = 0; i < d; ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
  double lognorm = -0.5 * (d * std::log(2.0 * std::numbers::pi) + logdet);

  GridMeasure proto(origin, spacing, shape, std::vector<double>(cells, 0.0));
  std::vector<double> density(cells);
  Eigen::VectorXd x(d);
  for (std::size_t c = 0; c < cells; ++c) {
    for (int a = 0; a < d; ++a)
      x[a] = proto.cell_center(c, static_cast<std::size_t>(a)) - g.mean()[a];
    density[c] = std::exp(lognorm - 0.5 * x.dot(llt.solve(x)));
  }
  return proto.with_density(std::move(density));
}

double gaussian_hellinger_quadrature(const GaussianParams& g0,
                                     const GaussianParams& g1,
                                     int cells_per_axis,
                                     const ScaleConfig& cfg) {
  check_same_dim(g0, g1);
  int d = g0.dim();
  Eigen::VectorXd lo(d), hi(d);
  for (int a = 0; a < d; ++a) {
    double r0 = 8.0 * std::sqrt(g0.cov()(a, a));
    double r1 = 8.0 * std::sqrt(g1.cov()(a, a));
    lo[a] = std::min(g0.mean()[a] - r0, g1.mean()[a] - r1);
    hi[a] = std::max(g0.mean()[a] + r0, g1.mean()[a] + r1);
  }
  Eigen::VectorXd lengths = hi - lo;
  auto sq = [&](int cells) {
    double he =
        hellinger_distance(gaussian_density_grid(g0, lo, lengths, cells),
                           gaussian_density_grid(g1, lo, lengths, cells), cfg);
    return he * he;
  };
  double coarse = sq(cells_per_axis / 2);
  double fine = sq(cells_per_axis);
  return std::sqrt(std::max((4.0 * fine - coarse) / 3.0, 0.0));
}

ParametricFamily gaussian_grid_family(int dim, double mean_halfwidth,
                                      double sigma_min, double sigma_max,
                                      int cells_per_axis,
                                      const ScaleConfig& cfg) {
  double half = mean_halfwidth + 8.0 * std::sqrt(sigma_max);
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(dim, -half);
  Eigen::VectorXd lengths = Eigen::VectorXd::Constant(dim, 2.0 * half);

  ParametricFamily fam;
  fam.name = "gauss-grid";
  fam.param_dim = dim + dim * (dim + 1) / 2;
  fam.in_domain = [dim, mean_halfwidth, sigma_min,
                   sigma_max](const Eigen::VectorXd& p) {
    if (p.size() != dim + dim * (dim + 1) / 2) return false;
    if (p.head(dim).cwiseAbs().maxCoeff() > mean_halfwidth) return false;
    Eigen::MatrixXd s(dim, dim);
    int k = dim;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j <= i; ++j) { s(i, j) = p[k]; s(j, i) = p[k]; ++k; }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
    if (es.info() != Eigen::Success) return false;
    return es.eigenvalues().minCoeff() >= sigma_min &&
           es.eigenvalues().maxCoeff() <= sigma_max;
  };
  fam.realize = [dim, lo, lengths, cells_per_axis](const Eigen::VectorXd& p) -> Measure {
    return gaussian_density_grid(gaussian_unpack(p, dim), lo, lengths,
                                 cells_per_axis);
  };
  // Quarter of the classical form: the metric the ambient distance induces.
  fam.closed_form_metric = [dim, cfg](const Eigen::VectorXd& p) {
    return (0.25 * gaussian_fisher_matrix(gaussian_unpack(p, dim), cfg)).eval();
  };
  return fam;
}

}  // namespace hegeo
