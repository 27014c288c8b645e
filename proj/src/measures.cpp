#include "hegeo/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "hegeo/numeric_util.hpp"

namespace hegeo {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::zero_mass: return "ZeroMass";
    case Errc::incompatible_support: return "IncompatibleSupport";
    case Errc::alpha_out_of_range: return "AlphaOutOfRange";
    case Errc::s_out_of_range: return "SOutOfRange";
    case Errc::numerical_inconsistency: return "NumericalInconsistency";
    case Errc::degenerate_angle: return "DegenerateAngle";
    case Errc::step_out_of_domain: return "StepOutOfDomain";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::not_probability: return "NotProbability";
    case Errc::degenerate_geodesic: return "DegenerateGeodesic";
    case Errc::non_positive_param: return "NonPositiveParam";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_spd: return "NotSPD";
    case Errc::condition_violated: return "ConditionViolated";
    case Errc::exponent_too_small: return "ExponentTooSmall";
    case Errc::unbounded_metric: return "UnboundedMetric";
  }
  return "UnknownError";
}

std::string label_text(const Label& label) {
  if (const auto* s = std::get_if<std::string>(&label)) {
    std::string out = "\"";
    for (char c : *s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    out.push_back('"');
    return out;
  }
  const auto& tuple = std::get<std::vector<std::int64_t>>(label);
  std::string out = "[";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(tuple[i]);
  }
  out.push_back(']');
  return out;
}

Label product_label(const Label& a, const Label& b) {
  const auto* ta = std::get_if<std::vector<std::int64_t>>(&a);
  const auto* tb = std::get_if<std::vector<std::int64_t>>(&b);
  if (ta && tb) {
    std::vector<std::int64_t> joined = *ta;
    joined.insert(joined.end(), tb->begin(), tb->end());
    return joined;
  }
  return "(" + label_text(a) + "," + label_text(b) + ")";
}

ScaleConfig::ScaleConfig(double sigma) : sigma_(sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw std::invalid_argument("sigma must be a positive finite real");
}

namespace {

void check_weights(const std::vector<double>& w, const char* who) {
  for (double x : w) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw std::invalid_argument(std::string(who) +
                                  ": weights must be finite and >= 0");
  }
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Label> support,
                                 std::vector<double> weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
  if (support_.size() != weights_.size())
    throw std::invalid_argument("support/weights length mismatch");
  check_weights(weights_, "DiscreteMeasure");
  std::vector<std::size_t> order(support_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return support_[a] < support_[b];
  });
  std::vector<Label> s(support_.size());
  std::vector<double> w(weights_.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    s[i] = std::move(support_[order[i]]);
    w[i] = weights_[order[i]];
  }
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == s[i - 1])
      throw std::invalid_argument("support labels must be pairwise distinct");
  support_ = std::move(s);
  weights_ = std::move(w);
}

DiscreteMeasure DiscreteMeasure::dirac(Label label, double mass) {
  return DiscreteMeasure({std::move(label)}, {mass});
}

double DiscreteMeasure::total_mass() const { return sorted_sum(weights_); }

double DiscreteMeasure::weight_of(const Label& label) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), label);
  if (it == support_.end() || *it != label) return 0.0;
  return weights_[static_cast<std::size_t>(it - support_.begin())];
}

DiscreteMeasure DiscreteMeasure::scaled(double factor) const {
  if (!(factor >= 0.0))
    throw std::invalid_argument("scale factor must be >= 0");
  std::vector<double> w = weights_;
  for (double& x : w) x *= factor;
  DiscreteMeasure out;
  out.support_ = support_;
  out.weights_ = std::move(w);
  return out;
}

GridMeasure::GridMeasure(std::vector<double> origin,
                         std::vector<double> spacing,
                         std::vector<std::int64_t> shape,
                         std::vector<double> density)
    : origin_(std::move(origin)),
      spacing_(std::move(spacing)),
      shape_(std::move(shape)),
      density_(std::move(density)) {
  if (origin_.size() != spacing_.size() || origin_.size() != shape_.size())
    throw std::invalid_argument("grid origin/spacing/shape rank mismatch");
  std::size_t cells = 1;
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (shape_[i] <= 0) throw std::invalid_argument("grid shape must be positive");
    if (!(spacing_[i] > 0.0)) throw std::invalid_argument("grid spacing must be positive");
    cells *= static_cast<std::size_t>(shape_[i]);
  }
  if (density_.size() != cells)
    throw std::invalid_argument("density size does not match grid shape");
  check_weights(density_, "GridMeasure");
  cell_volume_ = 1.0;
  for (double h : spacing_) cell_volume_ *= h;
}

double GridMeasure::total_mass() const {
  return cell_volume_ * neumaier_sum(density_);
}

bool GridMeasure::same_geometry(const GridMeasure& other) const {
  return origin_ == other.origin_ && spacing_ == other.spacing_ &&
         shape_ == other.shape_;
}

GridMeasure GridMeasure::with_density(std::vector<double> density) const {
  return GridMeasure(origin_, spacing_, shape_, std::move(density));
}

GridMeasure GridMeasure::scaled(double factor) const {
  if (!(factor >= 0.0))
    throw std::invalid_argument("scale factor must be >= 0");
  std::vector<double> d = density_;
  for (double& x : d) x *= factor;
  return with_density(std::move(d));
}

double GridMeasure::cell_center(std::size_t flat, std::size_t axis) const {
  std::size_t stride = 1;
  for (std::size_t a = dim(); a-- > axis + 1;)
    stride *= static_cast<std::size_t>(shape_[a]);
  std::size_t idx = (flat / stride) % static_cast<std::size_t>(shape_[axis]);
  return origin_[axis] + (static_cast<double>(idx) + 0.5) * spacing_[axis];
}

double total_mass(const Measure& mu) {
  return std::visit([](const auto& m) { return m.total_mass(); }, mu);
}

Measure scaled(const Measure& mu, double factor) {
  return std::visit([&](const auto& m) -> Measure { return m.scaled(factor); },
                    mu);
}

Aligned align(const DiscreteMeasure& mu0, const DiscreteMeasure& mu1) {
  Aligned out;
  const auto& s0 = mu0.support();
  const auto& s1 = mu1.support();
  out.labels.reserve(s0.size() + s1.size());
  std::size_t i = 0, j = 0;
  while (i < s0.size() || j < s1.size()) {
    if (j == s1.size() || (i < s0.size() && s0[i] < s1[j])) {
      out.labels.push_back(s0[i]);
      out.w0.push_back(mu0.weights()[i]);
      out.w1.push_back(0.0);
      ++i;
    } else if (i == s0.size() || s1[j] < s0[i]) {
      out.labels.push_back(s1[j]);
      out.w0.push_back(0.0);
      out.w1.push_back(mu1.weights()[j]);
      ++j;
    } else {
      out.labels.push_back(s0[i]);
      out.w0.push_back(mu0.weights()[i]);
      out.w1.push_back(mu1.weights()[j]);
      ++i;
      ++j;
    }
  }
  return out;
}

void require_same_grid(const GridMeasure& mu0, const GridMeasure& mu1) {
  if (!mu0.same_geometry(mu1))
    fail(Errc::incompatible_support,
         "grid measures are comparable only on identical grids");
}

DiscreteMeasure product(const DiscreteMeasure& mu1,
                        const DiscreteMeasure& mu2) {
  std::vector<Label> support;
  std::vector<double> weights;
  support.reserve(mu1.size() * mu2.size());
  weights.reserve(mu1.size() * mu2.size());
  for (std::size_t i = 0; i < mu1.size(); ++i)
    for (std::size_t j = 0; j < mu2.size(); ++j) {
      support.push_back(product_label(mu1.support()[i], mu2.support()[j]));
      weights.push_back(mu1.weights()[i] * mu2.weights()[j]);
    }
  return DiscreteMeasure(std::move(support), std::move(weights));
}

DiscreteMeasure pushforward(const DiscreteMeasure& mu,
                            const std::function<Label(const Label&)>& map) {
  std::map<Label, std::vector<double>> groups;
  for (std::size_t i = 0; i < mu.size(); ++i)
    groups[map(mu.support()[i])].push_back(mu.weights()[i]);
  std::vector<Label> support;
  std::vector<double> weights;
  support.reserve(groups.size());
  weights.reserve(groups.size());
  for (auto& [label, ws] : groups) {
    support.push_back(label);
    weights.push_back(sorted_sum(std::move(ws)));
  }
  return DiscreteMeasure(std::move(support), std::move(weights));
}

namespace {

template <class M>
M normalize_impl(const M& mu) {
  double mass = mu.total_mass();
  if (weight_is_zero(mass))
    fail(Errc::zero_mass, "cannot normalize a zero measure");
  return mu.scaled(1.0 / mass);
}

}  // namespace

DiscreteMeasure normalize(const DiscreteMeasure& mu) { return normalize_impl(mu); }
GridMeasure normalize(const GridMeasure& mu) { return normalize_impl(mu); }

Measure normalize(const Measure& mu) {
  return std::visit([](const auto& m) -> Measure { return normalize(m); }, mu);
}

double tv_norm_diff(const DiscreteMeasure& mu0, const DiscreteMeasure& mu1) {
  Aligned a = align(mu0, mu1);
  std::vector<double> terms(a.labels.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    terms[i] = std::abs(a.w0[i] - a.w1[i]);
  return sorted_sum(std::move(terms));
}

double tv_norm_diff(const GridMeasure& mu0, const GridMeasure& mu1) {
  require_same_grid(mu0, mu1);
  std::vector<double> terms(mu0.cells());
  for (std::size_t i = 0; i < terms.size(); ++i)
    terms[i] = std::abs(mu0.density()[i] - mu1.density()[i]);
  return mu0.cell_volume() * neumaier_sum(terms);
}

double tv_norm_diff(const Measure& mu0, const Measure& mu1) {
  if (mu0.index() != mu1.index())
    fail(Errc::incompatible_support,
         "cannot compare a discrete measure with a grid measure");
  if (std::holds_alternative<DiscreteMeasure>(mu0))
    return tv_norm_diff(std::get<DiscreteMeasure>(mu0),
                        std::get<DiscreteMeasure>(mu1));
  return tv_norm_diff(std::get<GridMeasure>(mu0), std::get<GridMeasure>(mu1));
}

}  // namespace hegeo
