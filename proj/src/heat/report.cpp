#include "hk/heat/report.hpp"

#include <sstream>
#include <stdexcept>

namespace hk {

namespace {

std::string decimal(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

nlohmann::ordered_json rational_json(const Rational& r, OutputMode mode) {
  switch (mode) {
    case OutputMode::exact:
      return rational_to_string(r);
    case OutputMode::decimal:
      return r.get_d();
    case OutputMode::both:
      return {{"exact", rational_to_string(r)}, {"decimal", r.get_d()}};
  }
  return nullptr;
}

std::string volume_text(const Volume& v) {
  std::string out = rational_to_string(v.coefficient);
  if (v.pi_power == 1) out += "·π";
  if (v.pi_power > 1) out += "·π^" + std::to_string(v.pi_power);
  return out;
}

}  // namespace

OutputMode parse_output_mode(const std::string& text) {
  if (text == "exact") return OutputMode::exact;
  if (text == "decimal") return OutputMode::decimal;
  if (text == "both") return OutputMode::both;
  throw std::invalid_argument("output mode must be exact, decimal or both, got '" + text + "'");
}

std::string format_scalar(const Scalar& value) {
  if (value.is_real()) return rational_to_string(value.re()) + " (≈" + decimal(value.re().get_d()) + ")";
  return value.to_string() + " (≈" + decimal(value.re().get_d()) + (sgn(value.im()) < 0 ? "" : "+") +
         decimal(value.im().get_d()) + "i)";
}

nlohmann::ordered_json scalar_json(const Scalar& value, OutputMode mode) {
  if (value.is_real()) return rational_json(value.re(), mode);
  return {{"re", rational_json(value.re(), mode)}, {"im", rational_json(value.im(), mode)}};
}

nlohmann::ordered_json matrix_json(const Matrix& m, OutputMode mode) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c), mode));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json coefficient_json(const HeatCoefficients& coeffs, OutputMode mode,
                                        const std::optional<HeatTrace>& trace) {
  nlohmann::ordered_json out;
  out["n"] = coeffs.n;
  out["dimV"] = coeffs.dim;
  auto a = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < coeffs.a.size(); ++k) {
    nlohmann::ordered_json entry;
    entry["k"] = k;
    entry["matrix"] = matrix_json(coeffs.a[k], mode);
    a.push_back(std::move(entry));
  }
  out["a"] = std::move(a);
  if (trace) {
    nlohmann::ordered_json t;
    t["volume"] = {{"coefficient", rational_json(trace->volume.coefficient, mode)},
                   {"pi_power", trace->volume.pi_power}};
    auto values = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < trace->A.size(); ++k) {
      nlohmann::ordered_json entry;
      entry["k"] = k;
      entry["value"] = scalar_json(trace->A[k], mode);
      values.push_back(std::move(entry));
    }
    t["A"] = std::move(values);
    out["trace"] = std::move(t);
  }
  return out;
}

std::string coefficient_text(const HeatCoefficients& coeffs, const std::optional<HeatTrace>& trace) {
  std::ostringstream os;
  os << "n = " << coeffs.n << ", dimV = " << coeffs.dim << "\n";
  for (std::size_t k = 0; k < coeffs.a.size(); ++k) {
    const Matrix& a = coeffs.a[k];
    if (a.rows() == 1) {
      os << "a_" << k << " = " << format_scalar(a(0, 0)) << "\n";
      continue;
    }
    os << "a_" << k << " =\n";
    for (std::size_t r = 0; r < a.rows(); ++r) {
      os << "  [";
      for (std::size_t c = 0; c < a.cols(); ++c) os << (c ? ", " : "") << a(r, c).to_string();
      os << "]\n";
    }
  }
  if (trace) {
    os << "volume = " << volume_text(trace->volume) << "\n";
    const std::string unit = trace->volume.pi_power == 0 ? ""
                             : trace->volume.pi_power == 1 ? " π"
                                                           : " π^" + std::to_string(trace->volume.pi_power);
    for (std::size_t k = 0; k < trace->A.size(); ++k) {
      os << "A_" << k << " = " << format_scalar(trace->A[k]) << unit << "\n";
    }
  }
  return os.str();
}

}  // namespace hk
