#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "hegeo/errors.hpp"

namespace hegeo {

// Atom labels are opaque: either a string or a tuple of integers.  The
// variant's ordering (kind first, then lexicographic value) fixes a
// deterministic iteration order for every measure.
using Label = std::variant<std::string, std::vector<std::int64_t>>;

std::string label_text(const Label& label);

// Label of a pair of atoms in a product space.  Integer tuples concatenate,
// so products of integer-labelled spaces stay integer-labelled; any other
// combination is encoded as an unambiguous string.
Label product_label(const Label& a, const Label& b);

// Global scaling factor of the metric; the same sigma enters every distance
// in the library.
class ScaleConfig {
 public:
  ScaleConfig() = default;
  explicit ScaleConfig(double sigma);

  double sigma() const noexcept { return sigma_; }

 private:
  double sigma_ = 1.0;
};

// Finite nonnegative measure on a finite set of labelled atoms.  Immutable
// after construction; the support is kept label-sorted with pairwise
// distinct labels, weights may be zero.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  DiscreteMeasure(std::vector<Label> support, std::vector<double> weights);

  static DiscreteMeasure dirac(Label label, double mass = 1.0);

  const std::vector<Label>& support() const noexcept { return support_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return support_.size(); }

  double total_mass() const;
  // Weight at `label`, 0 if the label is not in the support.
  double weight_of(const Label& label) const;

  DiscreteMeasure scaled(double factor) const;

 private:
  std::vector<Label> support_;
  std::vector<double> weights_;
};

// Nonnegative density sampled on a uniform rectangular grid.  `density`
// holds one value per cell in row-major order; cell masses are density
// times the cell volume.  Two grid measures are comparable only when
// origin, spacing and shape agree exactly.
class GridMeasure {
 public:
  GridMeasure() = default;
  GridMeasure(std::vector<double> origin, std::vector<double> spacing,
              std::vector<std::int64_t> shape, std::vector<double> density);

  const std::vector<double>& origin() const noexcept { return origin_; }
  const std::vector<double>& spacing() const noexcept { return spacing_; }
  const std::vector<std::int64_t>& shape() const noexcept { return shape_; }
  const std::vector<double>& density() const noexcept { return density_; }

  std::size_t dim() const noexcept { return origin_.size(); }
  std::size_t cells() const noexcept { return density_.size(); }
  double cell_volume() const noexcept { return cell_volume_; }

  double total_mass() const;
  bool same_geometry(const GridMeasure& other) const;

  GridMeasure with_density(std::vector<double> density) const;
  GridMeasure scaled(double factor) const;

  // Center coordinate of cell `flat` along axis `axis`.
  double cell_center(std::size_t flat, std::size_t axis) const;

 private:
  std::vector<double> origin_;
  std::vector<double> spacing_;
  std::vector<std::int64_t> shape_;
  std::vector<double> density_;
  double cell_volume_ = 1.0;
};

using Measure = std::variant<DiscreteMeasure, GridMeasure>;

double total_mass(const Measure& mu);
Measure scaled(const Measure& mu, double factor);

// Atom-aligned view of two discrete measures on their merged support.
struct Aligned {
  std::vector<Label> labels;
  std::vector<double> w0;
  std::vector<double> w1;
};

Aligned align(const DiscreteMeasure& mu0, const DiscreteMeasure& mu1);

void require_same_grid(const GridMeasure& mu0, const GridMeasure& mu1);

DiscreteMeasure product(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2);

DiscreteMeasure pushforward(const DiscreteMeasure& mu,
                            const std::function<Label(const Label&)>& map);

DiscreteMeasure normalize(const DiscreteMeasure& mu);
GridMeasure normalize(const GridMeasure& mu);
Measure normalize(const Measure& mu);

double tv_norm_diff(const DiscreteMeasure& mu0, const DiscreteMeasure& mu1);
double tv_norm_diff(const GridMeasure& mu0, const GridMeasure& mu1);
double tv_norm_diff(const Measure& mu0, const Measure& mu1);

}  // namespace hegeo
