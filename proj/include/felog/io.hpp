#pragma once

// JSON / CSV serialization. Doubles are written in shortest round-trip
// form, so a sequence read back from JSON has bit-identical g values.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "felog/euler_beta.hpp"
#include "felog/fracops.hpp"
#include "felog/series.hpp"

namespace felog::io {

/// Shortest representation that parses back to the same double;
/// "inf", "-inf", "nan" for non-finite values.
std::string format_double(double x);

nlohmann::json to_json(const BetaEulerSequence& seq);
/// Columns k, g_k, sign, log10_abs_E, E_k (E_k empty when it overflows).
std::string to_csv(const BetaEulerSequence& seq);
/// Inverse of to_json; only beta, m and g are read, raw is recomputed.
BetaEulerSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RadiusReport& rep, double beta, double m);
std::string to_csv(const RadiusReport& rep, double beta, double m);

nlohmann::json to_json(std::span<const EvalPoint> curve);
std::string to_csv(std::span<const EvalPoint> curve);

nlohmann::json to_json(const ResidualReport& rep, double tolerance);
std::string to_csv(const ResidualReport& rep);

nlohmann::json to_json(const ClassicalComparison& cmp, double m);
std::string to_csv(const ClassicalComparison& cmp);

}  // namespace felog::io
