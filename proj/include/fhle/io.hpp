#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fhle/estimates.hpp"
#include "fhle/field.hpp"
#include "fhle/monotonicity.hpp"
#include "fhle/profile.hpp"

namespace fhle::io {

inline constexpr int kSchemaVersion = 1;

// %.17g, which round-trips every double; non-finite values print as inf, -inf, nan.
std::string fmt(double v);

// Doubles become JSON numbers; non-finite values become the strings above
// because JSON has no literal for them.
nlohmann::json number(double v);

nlohmann::json to_json(const ProblemParams& p);
nlohmann::json to_json(const ScalingReport& r);

std::string energy_curve_csv(const EnergyCurve& curve);
std::string higher_order_csv(const std::vector<double>& lambdas, const std::vector<HigherOrderParts>& parts);
// One row per grid node plus the boundary trace at y = 0: columns r, y, value.
std::string field_csv(const HalfSpaceField& field);
std::string radial_csv(const SampledRadial& data, const std::string& value_column);

// Two-column numeric CSV (r, u). A non-numeric first line is treated as a header.
SampledRadial read_profile_csv(const std::string& path);

// "-" writes to standard output. Throws IoFailure when the file cannot be written.
void write_output(const std::string& path, const std::string& content);

// Flat key=value lines (# comments allowed) or a JSON object with scalar or
// array values. Keys are flag names without the leading dashes.
std::map<std::string, std::vector<std::string>> read_config(const std::string& path);

}  // namespace fhle::io
