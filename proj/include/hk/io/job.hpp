#pragma once

#include "hk/bundle/rep.hpp"
#include "hk/heat/engine.hpp"
#include "hk/heat/report.hpp"
#include "hk/space/catalog.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

namespace hk {

/// A space given either by catalog name or by its curvature datum.
using SpaceSource = std::variant<SpaceSpec, CurvatureData>;
/// A fiber given by catalog name or by an explicit generator table.
using BundleSource = std::variant<RepSpec, GeneratorTable>;

/// Parsed job file; see README for the format.
struct Job {
  SpaceSource space;
  BundleSource bundle = RepSpec{ScalarRepSpec{}};
  std::vector<Rational> twist;
  std::size_t k_max = 2;
  OutputMode output = OutputMode::exact;
  std::optional<Volume> volume;
};

/// Throws ParseError with the byte position (syntax errors) or the JSON
/// pointer of the offending field (schema errors).
Job parse_job(const std::string& text);
Job load_job(const std::filesystem::path& path);

/// Catalog descriptors such as "S2", "H3", "flat(2)", "flat(2)xS2".
SpaceSpec parse_space_name(const std::string& name);

/// Scalars are "p/q", "p", integers, or {"re": …, "im": …}.
Scalar parse_scalar(const nlohmann::json& value, const std::string& where);
Matrix parse_matrix(const nlohmann::json& value, const std::string& where);

SymmetricSpaceModel build_space(const Job& job);
FiberRep build_bundle(const Job& job, const SymmetricSpaceModel& model);

/// The job's volume, or the round-sphere volume for a catalog sphere.
std::optional<Volume> job_volume(const Job& job);

}  // namespace hk
