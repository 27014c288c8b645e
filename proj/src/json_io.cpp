#include "hegeo/json_io.hpp"

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

namespace hegeo {

using nlohmann::json;

namespace {

json label_to_json(const Label& label) {
  if (const auto* s = std::get_if<std::string>(&label)) return *s;
  return std::get<std::vector<std::int64_t>>(label);
}

Label label_from_json(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) return j.get<std::vector<std::int64_t>>();
  throw std::invalid_argument("support labels must be strings or integer arrays");
}

}  // namespace

json measure_to_json(const Measure& mu) {
  json j;
  if (const auto* d = std::get_if<DiscreteMeasure>(&mu)) {
    j["type"] = "discrete";
    json support = json::array();
    for (const auto& l : d->support()) support.push_back(label_to_json(l));
    j["support"] = std::move(support);
    j["weights"] = d->weights();
  } else {
    const auto& g = std::get<GridMeasure>(mu);
    j["type"] = "grid";
    j["origin"] = g.origin();
    j["spacing"] = g.spacing();
    j["shape"] = g.shape();
    j["density"] = g.density();
  }
  return j;
}

Measure measure_from_json(const json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "discrete") {
    std::vector<Label> support;
    for (const auto& l : j.at("support")) support.push_back(label_from_json(l));
    return DiscreteMeasure(std::move(support),
                           j.at("weights").get<std::vector<double>>());
  }
  if (type == "grid")
    return GridMeasure(j.at("origin").get<std::vector<double>>(),
                       j.at("spacing").get<std::vector<double>>(),
                       j.at("shape").get<std::vector<std::int64_t>>(),
                       j.at("density").get<std::vector<double>>());
  throw std::invalid_argument("unknown measure type: " + type);
}

json curve_to_json(const SampledCurve& curve) {
  json j;
  j["times"] = curve.times();
  json states = json::array();
  for (std::size_t k = 0; k < curve.samples(); ++k)
    states.push_back(measure_to_json(curve.state(k)));
  j["states"] = std::move(states);
  return j;
}

SampledCurve curve_from_json(const json& j) {
  std::vector<double> times = j.at("times").get<std::vector<double>>();
  std::vector<DiscreteMeasure> states;
  for (const auto& s : j.at("states")) {
    Measure m = measure_from_json(s);
    if (!std::holds_alternative<DiscreteMeasure>(m))
      throw std::invalid_argument("curve states must be discrete measures");
    states.push_back(std::get<DiscreteMeasure>(std::move(m)));
  }
  return SampledCurve(std::move(times), std::move(states));
}

json gaussian_to_json(const GaussianParams& g) {
  json j;
  j["mean"] = std::vector<double>(g.mean().data(), g.mean().data() + g.dim());
  json rows = json::array();
  for (int i = 0; i < g.dim(); ++i) {
    json row = json::array();
    for (int k = 0; k < g.dim(); ++k) row.push_back(g.cov()(i, k));
    rows.push_back(std::move(row));
  }
  j["cov"] = std::move(rows);
  return j;
}

GaussianParams gaussian_from_json(const json& j) {
  auto mean = j.at("mean").get<std::vector<double>>();
  auto rows = j.at("cov");
  const auto d = static_cast<Eigen::Index>(mean.size());
  Eigen::VectorXd m(d);
  for (Eigen::Index i = 0; i < d; ++i) m[i] = mean[static_cast<std::size_t>(i)];
  Eigen::MatrixXd cov(d, d);
  if (static_cast<Eigen::Index>(rows.size()) != d)
    throw std::invalid_argument("cov must be a d x d array");
  for (Eigen::Index i = 0; i < d; ++i) {
    auto row = rows[static_cast<std::size_t>(i)].get<std::vector<double>>();
    if (static_cast<Eigen::Index>(row.size()) != d)
      throw std::invalid_argument("cov must be a d x d array");
    for (Eigen::Index k = 0; k < d; ++k) cov(i, k) = row[static_cast<std::size_t>(k)];
  }
  return GaussianParams(std::move(m), std::move(cov));
}

namespace {
json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}
}  // namespace

Measure load_measure(const std::string& path) {
  return measure_from_json(load_json(path));
}

GaussianParams load_gaussian(const std::string& path) {
  return gaussian_from_json(load_json(path));
}

SampledCurve load_curve(const std::string& path) {
  return curve_from_json(load_json(path));
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace hegeo
