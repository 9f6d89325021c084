#pragma once

#include "ordcheck/majorization.hpp"
#include "ordcheck/mc_oracle.hpp"
#include "ordcheck/ordering.hpp"
#include "ordcheck/verify.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace ordcheck::io {

// Field names and layout are versioned; bump kSchemaVersion on any change so
// downstream plotting scripts can detect it.
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const GridSpec& g);
[[nodiscard]] Json to_json(const OrderingVerdict& v);
[[nodiscard]] Json to_json(const TheoremReport& r);
[[nodiscard]] Json to_json(const ScanReport& r);
[[nodiscard]] Json to_json(const DkwResult& r);
[[nodiscard]] Json to_json(const EmpiricalStReport& r);
[[nodiscard]] Json to_json(const ExampleReport& r);
[[nodiscard]] Json to_json(const SchurProbeReport& r);

// 17 significant digits, enough to round-trip a double exactly.
[[nodiscard]] std::string format_double(double v);

// "t,ratio\n" header then one row per sample, LF line endings.
[[nodiscard]] std::string curve_to_csv(const std::vector<std::pair<double, double>>& curve);

} // namespace ordcheck::io
