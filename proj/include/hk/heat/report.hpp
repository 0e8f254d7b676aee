#pragma once

#include "hk/heat/engine.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace hk {

enum class OutputMode { exact, decimal, both };

/// Parses "exact", "decimal" or "both"; throws std::invalid_argument otherwise.
OutputMode parse_output_mode(const std::string& text);

/// "1/3 (≈0.333333)"; complex values render both parts.
std::string format_scalar(const Scalar& value);

/// One JSON value per entry according to the mode: "p/q" strings, numbers,
/// or {"exact", "decimal"} pairs. Complex entries become {"re", "im"}.
nlohmann::ordered_json scalar_json(const Scalar& value, OutputMode mode);
nlohmann::ordered_json matrix_json(const Matrix& m, OutputMode mode);

/// {"n", "dimV", "a": [{"k", "matrix"}...], "trace": [...]}; "trace" only
/// when a trace is given. Keys are emitted in a fixed order.
nlohmann::ordered_json coefficient_json(const HeatCoefficients& coeffs, OutputMode mode,
                                        const std::optional<HeatTrace>& trace = std::nullopt);

/// Plain-text table of the coefficients (and the trace when given).
std::string coefficient_text(const HeatCoefficients& coeffs, const std::optional<HeatTrace>& trace = std::nullopt);

}  // namespace hk
