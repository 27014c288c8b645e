#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hegeo/curves.hpp"
#include "hegeo/gaussian.hpp"
#include "hegeo/measures.hpp"

namespace hegeo {

// Measure wire format:
//   {"type":"discrete","support":[...],"weights":[...]}
//   {"type":"grid","origin":[...],"spacing":[...],"shape":[...],"density":[...]}
// Support entries are strings or integer arrays; grid density is row-major.
nlohmann::json measure_to_json(const Measure& mu);
Measure measure_from_json(const nlohmann::json& j);

// Curve wire format: {"times":[...],"states":[<measure>,...]}.
nlohmann::json curve_to_json(const SampledCurve& curve);
SampledCurve curve_from_json(const nlohmann::json& j);

// Gaussian wire format: {"mean":[...],"cov":[[...],...]}.
nlohmann::json gaussian_to_json(const GaussianParams& g);
GaussianParams gaussian_from_json(const nlohmann::json& j);

Measure load_measure(const std::string& path);
GaussianParams load_gaussian(const std::string& path);
SampledCurve load_curve(const std::string& path);

// Shortest-round-trip float formatting used by all CSV output.
std::string format_double(double x);

}  // namespace hegeo
