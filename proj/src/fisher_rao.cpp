#include "hegeo/fisher_rao.hpp"

#include <cmath>
#include <numbers>

#include "hegeo/numeric_util.hpp"

namespace hegeo {

namespace {

constexpr double kPi = std::numbers::pi;

void check_in_domain(const ParametricFamily& family, const Eigen::VectorXd& p,
                     const char* what) {
  if (!family.in_domain(p))
    fail(Errc::step_out_of_domain,
         std::string(what) + ": parameter left the domain of " + family.name);
}

Eigen::MatrixXd metric_at(const ParametricFamily& family,
                          const Eigen::VectorXd& p, const ScaleConfig& cfg) {
  if (family.closed_form_metric) return family.closed_form_metric(p);
  return fisher_matrix_fd(family, p, 0.0, cfg);
}

}  // namespace

Eigen::MatrixXd fisher_matrix_fd(const ParametricFamily& family,
                                 const Eigen::VectorXd& p, double eps,
                                 const ScaleConfig& cfg) {
  const int m = family.param_dim;
  if (p.size() != m)
    fail(Errc::dimension_mismatch, "parameter dimension mismatch");
  check_in_domain(family, p, "fisher_matrix_fd");
  if (eps <= 0.0) eps = 1e-4 * (1.0 + p.norm());

  Measure center = family.realize(p);
  auto quad = [&](const Eigen::VectorXd& v, double e) {
    Eigen::VectorXd pp = p + e * v, pm = p - e * v;
    check_in_domain(family, pp, "fisher_matrix_fd");
    check_in_domain(family, pm, "fisher_matrix_fd");
    double dp = hellinger_distance(center, family.realize(pp), cfg);
    double dm = hellinger_distance(center, family.realize(pm), cfg);
    return (dp * dp + dm * dm) / (2.0 * e * e);
  };
  // One Richardson step removes the O(eps^2) truncation term.
  auto form = [&](const Eigen::VectorXd& v) {
    return (4.0 * quad(v, 0.5 * eps) - quad(v, eps)) / 3.0;
  };

  Eigen::MatrixXd g(m, m);
  std::vector<double> diag(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Unit(m, i);
    diag[static_cast<std::size_t>(i)] = form(ei);
    g(i, i) = diag[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Eigen::VectorXd sum = Eigen::VectorXd::Unit(m, i) + Eigen::VectorXd::Unit(m, j);
      Eigen::VectorXd dif = Eigen::VectorXd::Unit(m, i) - Eigen::VectorXd::Unit(m, j);
      double gij = 0.25 * (form(sum) - form(dif));
      g(i, j) = gij;
      g(j, i) = gij;
    }
  return 0.5 * (g + g.transpose());
}

double path_length_metric(const ParametricFamily& family,
                          const std::vector<Eigen::VectorXd>& path,
                          const ScaleConfig& cfg) {
  std::vector<double> segs;
  segs.reserve(path.size());
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    check_in_domain(family, path[k], "path_length");
    Eigen::VectorXd mid = 0.5 * (path[k] + path[k + 1]);
    Eigen::VectorXd dp = path[k + 1] - path[k];
    double q = dp.dot(metric_at(family, mid, cfg) * dp);
    segs.push_back(sqrt_nonneg(q, 1.0, "path segment"));
  }
  if (!path.empty()) check_in_domain(family, path.back(), "path_length");
  return neumaier_sum(segs);
}

double path_length_chords(const ParametricFamily& family,
                          const std::vector<Eigen::VectorXd>& path,
                          const ScaleConfig& cfg) {
  std::vector<double> segs;
  segs.reserve(path.size());
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    check_in_domain(family, path[k], "path_length");
    segs.push_back(hellinger_distance(family.realize(path[k]),
                                      family.realize(path[k + 1]), cfg));
  }
  return neumaier_sum(segs);
}

namespace {

// Discrete path energy with the metric frozen at segment midpoints.
class PathEnergy {
 public:
  PathEnergy(const ParametricFamily& family, const ScaleConfig& cfg,
             std::vector<Eigen::VectorXd> pts)
      : family_(family), cfg_(cfg), pts_(std::move(pts)) {
    seg_.assign(pts_.size() - 1, 0.0);
    for (std::size_t k = 0; k + 1 < pts_.size(); ++k)
      seg_[k] = segment_energy(k);
  }

  double segment_energy(std::size_t k) const {
    Eigen::VectorXd mid = 0.5 * (pts_[k] + pts_[k + 1]);
    if (!family_.in_domain(mid) || !family_.in_domain(pts_[k]) ||
        !family_.in_domain(pts_[k + 1]))
      fail(Errc::step_out_of_domain, "path point left the family domain");
    Eigen::VectorXd dp = pts_[k + 1] - pts_[k];
    double segments = static_cast<double>(pts_.size() - 1);
    return segments * dp.dot(metric_at(family_, mid, cfg_) * dp);
  }

  double total() const { return neumaier_sum(seg_); }

  // Energy change of moving interior point k to `q` (segments k-1 and k).
  bool try_move(std::size_t k, const Eigen::VectorXd& q, double* delta) {
    Eigen::VectorXd saved = pts_[k];
    pts_[k] = q;
    double e0 = seg_[k - 1] + seg_[k];
    double a, b;
    try {
      a = segment_energy(k - 1);
      b = segment_energy(k);
    } catch (const Error&) {
      pts_[k] = saved;
      return false;
    }
    *delta = (a + b) - e0;
    pts_[k] = saved;
    return true;
  }

  void commit(std::size_t k, const Eigen::VectorXd& q) {
    pts_[k] = q;
    seg_[k - 1] = segment_energy(k - 1);
    seg_[k] = segment_energy(k);
  }

  const std::vector<Eigen::VectorXd>& points() const { return pts_; }
  std::vector<Eigen::VectorXd>& points() { return pts_; }

  void refresh() {
    for (std::size_t k = 0; k + 1 < pts_.size(); ++k) seg_[k] = segment_energy(k);
  }

 private:
  const ParametricFamily& family_;
  const ScaleConfig& cfg_;
  std::vector<Eigen::VectorXd> pts_;
  std::vector<double> seg_;
};

}  // namespace

FrNumericResult fr_distance_numeric(const ParametricFamily& family,
                                    const Eigen::VectorXd& p0,
                                    const Eigen::VectorXd& p1,
                                    const ScaleConfig& cfg,
                                    const FrNumericOpts& opts) {
  check_in_domain(family, p0, "fr_distance_numeric");
  check_in_domain(family, p1, "fr_distance_numeric");
  const int n_int = opts.interior_points;
  const std::size_t n_pts = static_cast<std::size_t>(n_int) + 2;

  std::vector<Eigen::VectorXd> pts(n_pts);
  for (std::size_t k = 0; k < n_pts; ++k) {
    double s = static_cast<double>(k) / static_cast<double>(n_pts - 1);
    pts[k] = (1.0 - s) * p0 + s * p1;
    if (!family.in_domain(pts[k])) {
      if (!family.project)
        fail(Errc::step_out_of_domain,
             "straight initial segment leaves the domain and no projection "
             "hook is available");
      pts[k] = family.project(pts[k]);
    }
  }

  const int m = family.param_dim;
  const std::size_t dofs = static_cast<std::size_t>(n_int) * m;
  PathEnergy energy(family, cfg, std::move(pts));
  double e = energy.total();

  FrNumericResult out;
  if (e <= 1e-28 || dofs == 0) {
    out.distance = std::sqrt(std::max(e, 0.0));
    out.energy = e;
    out.path = energy.points();
    return out;
  }

  auto gradient = [&](Eigen::VectorXd& g) {
    g.resize(static_cast<Eigen::Index>(dofs));
    for (int k = 1; k <= n_int; ++k)
      for (int i = 0; i < m; ++i) {
        const auto ku = static_cast<std::size_t>(k);
        double h = 1e-6 * (1.0 + std::abs(energy.points()[ku][i]));
        Eigen::VectorXd qp = energy.points()[ku];
        Eigen::VectorXd qm = qp;
        qp[i] += h;
        qm[i] -= h;
        double dp = 0.0, dm = 0.0;
        bool okp = energy.try_move(ku, qp, &dp);
        bool okm = energy.try_move(ku, qm, &dm);
        double gi;
        if (okp && okm)
          gi = (dp - dm) / (2.0 * h);
        else if (okp)
          gi = dp / h;
        else if (okm)
          gi = -dm / h;
        else
          gi = 0.0;
        g[static_cast<Eigen::Index>((ku - 1) * static_cast<std::size_t>(m) + static_cast<std::size_t>(i))] = gi;
      }
  };

  auto apply_step = [&](const Eigen::VectorXd& dir, double step,
                        std::vector<Eigen::VectorXd>* trial) {
    *trial = energy.points();
    for (int k = 1; k <= n_int; ++k)
      for (int i = 0; i < m; ++i)
        (*trial)[static_cast<std::size_t>(k)][i] -=
            step * dir[static_cast<Eigen::Index>((static_cast<std::size_t>(k) - 1) * static_cast<std::size_t>(m) + static_cast<std::size_t>(i))];
  };

  Eigen::VectorXd grad, prev_grad;
  Eigen::VectorXd prev_x;
  gradient(grad);
  double step = 1e-2 / (grad.norm() + 1.0);
  double last_rel_drop = 1.0;
  int iter = 0;

  auto flatten = [&]() {
    Eigen::VectorXd x(static_cast<Eigen::Index>(dofs));
    for (int k = 1; k <= n_int; ++k)
      for (int i = 0; i < m; ++i)
        x[static_cast<Eigen::Index>((static_cast<std::size_t>(k) - 1) * static_cast<std::size_t>(m) + static_cast<std::size_t>(i))] =
            energy.points()[static_cast<std::size_t>(k)][i];
    return x;
  };

  for (; iter < opts.max_iters; ++iter) {
    if (grad.norm() <= 1e-14 * (1.0 + e)) {
      last_rel_drop = 0.0;
      break;
    }
    // Barzilai-Borwein step with Armijo backtracking.
    if (iter > 0) {
      Eigen::VectorXd sx = flatten() - prev_x;
      Eigen::VectorXd sy = grad - prev_grad;
      double denom = sx.dot(sy);
      if (denom > 1e-300) step = sx.squaredNorm() / denom;
      step = std::clamp(step, 1e-14, 1e6);
    }
    prev_x = flatten();
    prev_grad = grad;

    double g2 = grad.squaredNorm();
    std::vector<Eigen::VectorXd> trial;
    double e_new = e;
    bool accepted = false;
    double t = step;
    for (int bt = 0; bt < 60; ++bt) {
      apply_step(grad, t, &trial);
      bool ok = true;
      std::vector<double> seg_trial(n_pts - 1, 0.0);
      try {
        PathEnergy probe(family, cfg, trial);
        e_new = probe.total();
      } catch (const Error&) {
        ok = false;
      }
      (void)seg_trial;
      if (ok && e_new <= e - 1e-4 * t * g2) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      last_rel_drop = 0.0;
      break;  // no descent direction at working precision
    }
    energy.points() = trial;
    energy.refresh();
    last_rel_drop = (e - e_new) / std::max(e, 1e-300);
    e = e_new;
    gradient(grad);
    if (last_rel_drop < opts.tol) break;
  }

  if (iter >= opts.max_iters && last_rel_drop > opts.tol)
    fail(Errc::no_convergence,
         "path energy minimization exhausted the iteration budget");

  out.distance = std::sqrt(std::max(e, 0.0));
  out.energy = e;
  out.iterations = iter;
  out.path = energy.points();
  return out;
}

namespace {

void check_probability(const Measure& nu, const char* what) {
  if (std::abs(total_mass(nu) - 1.0) > 1e-9)
    fail(Errc::not_probability,
         std::string(what) + ": measure must have unit mass");
}

}  // namespace

double bhattacharyya_distance(const Measure& nu0, const Measure& nu1,
                              const ScaleConfig& cfg) {
  check_probability(nu0, "bhattacharyya_distance");
  check_probability(nu1, "bhattacharyya_distance");
  double he = hellinger_distance(nu0, nu1, cfg);
  double x = clamp_or_fail(he / (2.0 * cfg.sigma()), -1.0, 1.0, 1e-9,
                           "bhattacharyya argument");
  return 2.0 * cfg.sigma() * std::asin(x);
}

Measure spherical_geodesic(const Measure& nu0, const Measure& nu1, double s,
                           const ScaleConfig& cfg) {
  check_probability(nu0, "spherical_geodesic");
  check_probability(nu1, "spherical_geodesic");
  if (!(s >= 0.0 && s <= 1.0))
    fail(Errc::s_out_of_range, "geodesic parameter outside [0, 1]");
  if (s == 0.0) return nu0;
  if (s == 1.0) return nu1;
  double delta = bhattacharyya_distance(nu0, nu1, cfg) / cfg.sigma();
  if (delta < 1e-15) return nu0;  // coincident endpoints
  double sd = std::sin(delta);
  double a = std::sin((1.0 - s) * delta);
  double b = std::sin(s * delta);
  double t = b / (a + b);
  double n = ((a + b) / sd) * ((a + b) / sd);
  return scaled(hellinger_geodesic(nu0, nu1, t), n);
}

ConePoint make_cone_point(double r, Measure base) {
  if (!(r >= 0.0)) fail(Errc::non_positive_param, "cone radius must be >= 0");
  check_probability(base, "cone point");
  return ConePoint{r, std::move(base)};
}

double cone_distance(const ConePoint& a, const ConePoint& b, double base_fr,
                     const ScaleConfig& cfg) {
  if (!(base_fr >= 0.0))
    fail(Errc::non_positive_param, "base distance must be >= 0");
  double angle = std::min(base_fr / cfg.sigma(), kPi);
  double value = a.r * a.r + b.r * b.r - 2.0 * a.r * b.r * std::cos(angle);
  return cfg.sigma() * sqrt_nonneg(value, a.r * a.r + b.r * b.r, "cone distance");
}

Measure cone_geodesic(const ConePoint& a, const ConePoint& b,
                      const std::function<Measure(double)>& base_geodesic,
                      double base_fr, double s, const ScaleConfig& cfg) {
  if (!(s >= 0.0 && s <= 1.0))
    fail(Errc::s_out_of_range, "geodesic parameter outside [0, 1]");
  if (a.r == 0.0 && b.r == 0.0)
    fail(Errc::degenerate_geodesic, "both cone points sit at the apex");
  double r0 = a.r, r1 = b.r;
  if (s == 0.0) return scaled(a.base, r0 * r0);
  if (s == 1.0) return scaled(b.base, r1 * r1);

  double delta = base_fr / cfg.sigma();
  if (delta >= kPi) {
    // Through the apex: down the first ray, then up the second.
    double split = r0 / (r0 + r1);
    if (s <= split) {
      double rho = r0 - (r0 + r1) * s;
      return scaled(a.base, rho * rho);
    }
    double rho = (r0 + r1) * s - r0;
    return scaled(b.base, rho * rho);
  }

  double c = std::cos(delta);
  double rhat2 = (1.0 - s) * (1.0 - s) * r0 * r0 + s * s * r1 * r1 +
                 2.0 * (s - s * s) * r0 * r1 * c;
  if (rhat2 <= 0.0) return scaled(a.base, 0.0);
  // Base parameter via the planar development of the cone; atan2 keeps the
  // correct branch when the swept angle exceeds pi/2.
  double zeta = 0.0;
  if (delta > 0.0) {
    double phi = std::atan2(s * r1 * std::sin(delta), (1.0 - s) * r0 + s * r1 * c);
    zeta = phi / delta;
  }
  zeta = std::clamp(zeta, 0.0, 1.0);
  return scaled(base_geodesic(zeta), rhat2);
}

double product_fr(double fr1, double fr2) {
  if (!(fr1 >= 0.0) || !(fr2 >= 0.0))
    fail(Errc::non_positive_param, "factor distances must be >= 0");
  return std::hypot(fr1, fr2);
}

}  // namespace hegeo
