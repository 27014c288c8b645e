#include "hegeo/families.hpp"

#include <cmath>

#include "hegeo/numeric_util.hpp"

namespace hegeo {

namespace {

std::vector<std::size_t> grid_strides(const std::vector<std::int64_t>& shape) {
  std::vector<std::size_t> strides(shape.size(), 1);
  for (std::size_t a = shape.size(); a-- > 1;)
    strides[a - 1] = strides[a] * static_cast<std::size_t>(shape[a]);
  return strides;
}

void check_positive(const Eigen::VectorXd& v, const char* who) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!(v[i] > 0.0))
      fail(Errc::non_positive_param,
           std::string(who) + ": parameters must be strictly positive");
}

}  // namespace

Eigen::MatrixXd translation_metric(const GridMeasure& f, const ScaleConfig& cfg) {
  const std::size_t n = f.dim();
  const auto& shape = f.shape();
  auto strides = grid_strides(shape);

  std::vector<double> g(f.cells());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::sqrt(f.density()[i]);

  auto axis_index = [&](std::size_t flat, std::size_t a) {
    return (flat / strides[a]) % static_cast<std::size_t>(shape[a]);
  };
  // d/dx_a sqrt(f) at cell `flat` using neighbors at distance `step` cells;
  // one-sided when the stencil would leave the grid.
  auto grad = [&](std::size_t flat, std::size_t a, std::size_t step) {
    std::size_t idx = axis_index(flat, a);
    std::size_t hi_ok = idx + step < static_cast<std::size_t>(shape[a]);
    std::size_t lo_ok = idx >= step;
    double h = f.spacing()[a];
    if (hi_ok && lo_ok)
      return (g[flat + step * strides[a]] - g[flat - step * strides[a]]) /
             (2.0 * step * h);
    if (hi_ok) return (g[flat + step * strides[a]] - g[flat]) / (step * h);
    if (lo_ok) return (g[flat] - g[flat - step * strides[a]]) / (step * h);
    return 0.0;
  };

  Eigen::MatrixXd acc1 = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                               static_cast<Eigen::Index>(n));
  double tr1_int = 0.0, tr2_int = 0.0;
  std::vector<double> gr(n), gr2(n);
  for (std::size_t c = 0; c < f.cells(); ++c) {
    bool interior2 = true;
    for (std::size_t a = 0; a < n; ++a) {
      gr[a] = grad(c, a, 1);
      std::size_t idx = axis_index(c, a);
      if (idx < 2 || idx + 2 >= static_cast<std::size_t>(shape[a]))
        interior2 = false;
      else
        gr2[a] = grad(c, a, 2);
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        acc1(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +=
            gr[a] * gr[b];
    if (interior2)
      for (std::size_t a = 0; a < n; ++a) {
        tr1_int += gr[a] * gr[a];
        tr2_int += gr2[a] * gr2[a];
      }
  }

  double s2 = cfg.sigma() * cfg.sigma();
  double cv = f.cell_volume();
  // A jump contributes ~1/h to the h-stencil quadrature but only ~1/(2h) to
  // the 2h stencil, so a ratio well above 1 flags a divergent integral.
  if (tr1_int > 1.6 * tr2_int + 1e-12)
    fail(Errc::unbounded_metric,
         "gradient quadrature keeps growing under stencil refinement; the "
         "density has no square-integrable root gradient");
  return 4.0 * s2 * cv * acc1;
}

IndicatorDemo translation_indicator_demo(double y, double z,
                                         const ScaleConfig& cfg) {
  double s2 = cfg.sigma() * cfg.sigma();
  IndicatorDemo out;
  out.closed_form = 2.0 * s2 * std::min(std::abs(y - z), 1.0);

  // Snap both shifts to the grid so all indicator edges are cell boundaries
  // and the cell densities are exact.
  const double h = 1.0 / 4096.0;
  double ys = std::llround(y / h) * h;
  double zs = std::llround(z / h) * h;
  out.snapped_shift = std::abs(ys - zs);

  double lo = std::min(ys, zs) - 0.5;
  double hi = std::max(ys, zs) + 1.5;
  auto cells = static_cast<std::int64_t>(std::llround((hi - lo) / h));
  std::vector<double> fy(static_cast<std::size_t>(cells), 0.0);
  std::vector<double> fz(static_cast<std::size_t>(cells), 0.0);
  for (std::int64_t i = 0; i < cells; ++i) {
    double x = lo + (static_cast<double>(i) + 0.5) * h;
    fy[static_cast<std::size_t>(i)] = (x > ys && x < ys + 1.0) ? 1.0 : 0.0;
    fz[static_cast<std::size_t>(i)] = (x > zs && x < zs + 1.0) ? 1.0 : 0.0;
  }
  GridMeasure my({lo}, {h}, {cells}, std::move(fy));
  GridMeasure mz({lo}, {h}, {cells}, std::move(fz));
  double he = hellinger_distance(my, mz, cfg);
  out.grid_value = he * he;
  return out;
}

double poisson_hellinger(const Eigen::VectorXd& alpha,
                         const Eigen::VectorXd& beta, const ScaleConfig& cfg) {
  if (alpha.size() != beta.size())
    fail(Errc::dimension_mismatch, "poisson parameters differ in dimension");
  check_positive(alpha, "poisson_hellinger");
  check_positive(beta, "poisson_hellinger");
  double b = 0.0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    double d = std::sqrt(alpha[i]) - std::sqrt(beta[i]);
    b -= 0.5 * d * d;
  }
  double s2 = cfg.sigma() * cfg.sigma();
  return std::sqrt(2.0 * s2 * (-std::expm1(b)));
}

double poisson_fr(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta,
                  const ScaleConfig& cfg) {
  if (alpha.size() != beta.size())
    fail(Errc::dimension_mismatch, "poisson parameters differ in dimension");
  check_positive(alpha, "poisson_fr");
  check_positive(beta, "poisson_fr");
  double q = 0.0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    double d = std::sqrt(alpha[i]) - std::sqrt(beta[i]);
    q += d * d;
  }
  return cfg.sigma() * std::sqrt(q);
}

Eigen::MatrixXd poisson_metric(const Eigen::VectorXd& alpha,
                               const ScaleConfig& cfg) {
  check_positive(alpha, "poisson_metric");
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(alpha.size(), alpha.size());
  double s2 = cfg.sigma() * cfg.sigma();
  for (Eigen::Index i = 0; i < alpha.size(); ++i) g(i, i) = 0.25 * s2 / alpha[i];
  return g;
}

namespace {

void enumerate_poisson(const Eigen::VectorXd& log_alpha, double neg_total,
                       int budget, std::size_t axis,
                       std::vector<std::int64_t>& n, double log_w,
                       std::vector<Label>& labels, std::vector<double>& weights) {
  if (axis == static_cast<std::size_t>(log_alpha.size())) {
    labels.emplace_back(n);
    weights.push_back(std::exp(neg_total + log_w));
    return;
  }
  double acc = 0.0;  // log(alpha^k / k!)
  for (int k = 0; k <= budget; ++k) {
    if (k > 0) acc += log_alpha[static_cast<Eigen::Index>(axis)] - std::log(k);
    n[axis] = k;
    enumerate_poisson(log_alpha, neg_total, budget - k, axis + 1, n,
                      log_w + acc, labels, weights);
  }
  n[axis] = 0;
}

}  // namespace

DiscreteMeasure poisson_measure(const Eigen::VectorXd& alpha, int trunc) {
  check_positive(alpha, "poisson_measure");
  if (trunc <= 0)
    trunc = std::max<int>(60, static_cast<int>(std::ceil(10.0 * alpha.maxCoeff())));
  Eigen::VectorXd log_alpha = alpha.array().log();
  std::vector<Label> labels;
  std::vector<double> weights;
  std::vector<std::int64_t> n(static_cast<std::size_t>(alpha.size()), 0);
  enumerate_poisson(log_alpha, -alpha.sum(), trunc, 0, n, 0.0, labels, weights);
  return DiscreteMeasure(std::move(labels), std::move(weights));
}

ParametricFamily poisson_family(int dim, const ScaleConfig& cfg) {
  ParametricFamily fam;
  fam.name = "poisson";
  fam.param_dim = dim;
  fam.in_domain = [dim](const Eigen::VectorXd& p) {
    if (p.size() != dim) return false;
    return (p.array() > 1e-8).all();
  };
  fam.realize = [](const Eigen::VectorXd& p) -> Measure {
    return poisson_measure(p);
  };
  fam.closed_form_metric = [cfg](const Eigen::VectorXd& p) {
    return poisson_metric(p, cfg);
  };
  fam.project = [](const Eigen::VectorXd& p) {
    return p.cwiseMax(1e-6).eval();
  };
  return fam;
}

double exp_hellinger(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta,
                     const ScaleConfig& cfg) {
  if (alpha.size() != beta.size())
    fail(Errc::dimension_mismatch, "exponential parameters differ in dimension");
  check_positive(alpha, "exp_hellinger");
  check_positive(beta, "exp_hellinger");
  double ratio = 1.0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i)
    ratio *= std::sqrt(alpha[i] * beta[i]) / (0.5 * (alpha[i] + beta[i]));
  double s2 = cfg.sigma() * cfg.sigma();
  return std::sqrt(std::max(2.0 * s2 * (1.0 - ratio), 0.0));
}

double exp_fr(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta,
              const ScaleConfig& cfg) {
  if (alpha.size() != beta.size())
    fail(Errc::dimension_mismatch, "exponential parameters differ in dimension");
  check_positive(alpha, "exp_fr");
  check_positive(beta, "exp_fr");
  double q = 0.0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    double d = std::log(alpha[i] / beta[i]);
    q += d * d;
  }
  return 0.5 * cfg.sigma() * std::sqrt(q);
}

Eigen::MatrixXd exp_metric(const Eigen::VectorXd& alpha, const ScaleConfig& cfg) {
  check_positive(alpha, "exp_metric");
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(alpha.size(), alpha.size());
  double s2 = cfg.sigma() * cfg.sigma();
  for (Eigen::Index i = 0; i < alpha.size(); ++i)
    g(i, i) = 0.25 * s2 / (alpha[i] * alpha[i]);
  return g;
}

GridMeasure exp_density_grid(const Eigen::VectorXd& alpha,
                             const Eigen::VectorXd& box_lengths,
                             int cells_per_axis) {
  check_positive(alpha, "exp_density_grid");
  const auto n = static_cast<std::size_t>(alpha.size());
  std::vector<double> origin(n, 0.0);
  std::vector<double> spacing(n);
  std::vector<std::int64_t> shape(n, cells_per_axis);
  std::size_t cells = 1;
  for (std::size_t a = 0; a < n; ++a) {
    spacing[a] = box_lengths[static_cast<Eigen::Index>(a)] / cells_per_axis;
    cells *= static_cast<std::size_t>(cells_per_axis);
  }
  double norm = 1.0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) norm *= alpha[i];

  std::vector<double> density(cells);
  GridMeasure proto(origin, spacing, shape, std::vector<double>(cells, 0.0));
  for (std::size_t c = 0; c < cells; ++c) {
    double e = 0.0;
    for (std::size_t a = 0; a < n; ++a)
      e += alpha[static_cast<Eigen::Index>(a)] * proto.cell_center(c, a);
    density[c] = norm * std::exp(-e);
  }
  return proto.with_density(std::move(density));
}

ParametricFamily exp_family(const Eigen::VectorXd& alpha_ref,
                            int cells_per_axis, const ScaleConfig& cfg) {
  check_positive(alpha_ref, "exp_family");
  Eigen::VectorXd lengths = (80.0 / alpha_ref.array()).matrix();
  ParametricFamily fam;
  fam.name = "exp";
  fam.param_dim = static_cast<int>(alpha_ref.size());
  Eigen::VectorXd lo = 0.5 * alpha_ref, hi = 1.6 * alpha_ref;
  fam.in_domain = [lo, hi](const Eigen::VectorXd& p) {
    if (p.size() != lo.size()) return false;
    return (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
  };
  fam.realize = [lengths, cells_per_axis](const Eigen::VectorXd& p) -> Measure {
    return exp_density_grid(p, lengths, cells_per_axis);
  };
  fam.closed_form_metric = [cfg](const Eigen::VectorXd& p) {
    return exp_metric(p, cfg);
  };
  return fam;
}

double exp_hellinger_quadrature(const Eigen::VectorXd& alpha,
                                const Eigen::VectorXd& beta,
                                int cells_per_axis, const ScaleConfig& cfg) {
  Eigen::VectorXd amin = alpha.cwiseMin(beta);
  Eigen::VectorXd lengths = (46.0 / amin.array()).matrix();
  auto sq = [&](int cells) {
    double he = hellinger_distance(exp_density_grid(alpha, lengths, cells),
                                   exp_density_grid(beta, lengths, cells), cfg);
    return he * he;
  };
  double coarse = sq(cells_per_axis / 2);
  double fine = sq(cells_per_axis);
  return std::sqrt(std::max((4.0 * fine - coarse) / 3.0, 0.0));
}

ParametricFamily simplex3_family(const ScaleConfig& cfg) {
  ParametricFamily fam;
  fam.name = "simplex3";
  fam.param_dim = 2;
  const double margin = 1e-9;
  fam.in_domain = [margin](const Eigen::VectorXd& p) {
    if (p.size() != 2) return false;
    return p[0] >= margin && p[1] >= margin && p[0] + p[1] <= 1.0 - margin;
  };
  fam.realize = [](const Eigen::VectorXd& p) -> Measure {
    return DiscreteMeasure(
        {std::string("a"), std::string("b"), std::string("c")},
        {p[0], p[1], 1.0 - p[0] - p[1]});
  };
  double s2 = cfg.sigma() * cfg.sigma();
  fam.closed_form_metric = [s2](const Eigen::VectorXd& p) {
    double p3 = 1.0 - p[0] - p[1];
    Eigen::MatrixXd g(2, 2);
    g(0, 0) = 1.0 / p[0] + 1.0 / p3;
    g(1, 1) = 1.0 / p[1] + 1.0 / p3;
    g(0, 1) = g(1, 0) = 1.0 / p3;
    return (0.25 * s2 * g).eval();
  };
  fam.project = [margin](const Eigen::VectorXd& p) {
    Eigen::VectorXd q = p.cwiseMax(2.0 * margin);
    double s = q[0] + q[1];
    if (s > 1.0 - 2.0 * margin) q *= (1.0 - 2.0 * margin) / s;
    return q;
  };
  return fam;
}

}  // namespace hegeo
