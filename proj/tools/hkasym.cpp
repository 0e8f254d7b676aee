// hkasym: heat kernel coefficients of homogeneous bundles over symmetric spaces.
//
// Exit codes:
//   0  success
//   2  job file or command line could not be parsed
//   3  validation or numerical check failed
//   4  requested order exceeds the supported maximum
//   5  group check refused (algebra dimension above 6)
//   6  group check diagnostics (point outside radius, step disagreement, divergence)

#include "hk/errors.hpp"
#include "hk/group/matrix_functions.hpp"
#include "hk/group/residuals.hpp"
#include "hk/heat/engine.hpp"
#include "hk/heat/report.hpp"
#include "hk/io/job.hpp"
#include "hk/oracle/spectral.hpp"
#include "hk/parallel.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>

namespace {

enum Exit : int {
  kOk = 0,
  kParse = 2,
  kCheckFailed = 3,
  kOverflow = 4,
  kRefused = 5,
  kDiagnostic = 6,
};

struct ComputeOptions {
  std::string path;
  std::optional<std::size_t> k_max;
  std::optional<std::string> output;
  bool trace = false;
  bool table = false;
};

struct GroupOptions {
  std::string path;
  std::size_t samples = 20;
  std::size_t heat_samples = 10;
  double radius = 0.5;
  double t = -0.2;
  double step = 1e-3;
  double laplace_tolerance = hk::kLaplaceTolerance;
  double heat_tolerance = hk::kHeatEquationTolerance;
  std::uint64_t seed = 1;
};

struct OracleOptions {
  std::size_t n = 2;
  std::size_t k_max = 3;
  double radius = 1.0;
};

int compute(const ComputeOptions& opt) {
  hk::Job job = hk::load_job(opt.path);
  if (opt.k_max) job.k_max = *opt.k_max;
  if (opt.output) job.output = hk::parse_output_mode(*opt.output);
  const hk::SymmetricSpaceModel model = hk::build_space(job);
  const hk::FiberRep rep = hk::build_bundle(job, model);
  const hk::HeatCoefficients coeffs = hk::heat_coefficients(model, rep, job.k_max);
  std::optional<hk::HeatTrace> trace;
  if (opt.trace) {
    const auto volume = hk::job_volume(job);
    if (!volume) throw hk::ParseError("--trace needs a 'volume' entry for this space");
    trace = hk::heat_trace(coeffs, *volume);
  }
  if (opt.table) {
    std::cout << hk::coefficient_text(coeffs, trace);
  } else {
    std::cout << hk::coefficient_json(coeffs, job.output, trace).dump(2) << "\n";
  }
  return kOk;
}

void print_report(const std::string& scope, const hk::ValidationReport& report) {
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << scope << "." << c.name;
    if (!c.passed && !c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << "\n";
  }
}

int validate(const std::string& path) {
  const hk::Job job = hk::load_job(path);
  hk::SymmetricSpaceModel model;
  try {
    model = hk::build_space(job);
  } catch (const hk::ModelError& e) {
    std::cout << "FAIL model.build: " << e.what() << "\n";
    return kCheckFailed;
  }
  const hk::ValidationReport space_report = hk::validate_model(model);
  print_report("model", space_report);
  bool ok = space_report.all_passed();
  try {
    const hk::FiberRep rep = hk::build_bundle(job, model);
    const hk::ValidationReport bundle_report = hk::validate_rep(model, rep);
    print_report("bundle", bundle_report);
    ok = ok && bundle_report.all_passed();
  } catch (const hk::RepError& e) {
    std::cout << "FAIL bundle.build: " << e.what() << "\n";
    ok = false;
  }
  std::cout << (ok ? "all checks passed" : "validation failed") << "\n";
  return ok ? kOk : kCheckFailed;
}

int check_group(const GroupOptions& opt) {
  const hk::Job job = hk::load_job(opt.path);
  const hk::SymmetricSpaceModel model = hk::build_space(job);
  const hk::FiberRep rep = hk::build_bundle(job, model);
  const hk::CurvatureGroup group(model, rep.B, std::max(opt.radius, 1.0));

  const auto points = hk::random_points(group.N(), opt.samples, opt.radius, opt.seed);
  hk::ResidualReport laplace{"laplace_identity", points.size(), hk::laplace_identity_residual(group, points, opt.step),
                             opt.laplace_tolerance};

  const auto heat_points = hk::random_points(group.N(), opt.heat_samples, opt.radius, opt.seed + 1);
  std::vector<hk::HeatSample> samples;
  for (const auto& k : heat_points) samples.push_back({k, opt.t});
  hk::ResidualReport heat{"heat_equation", samples.size(), hk::heat_equation_residual(group, samples, opt.step),
                          opt.heat_tolerance};

  auto out = nlohmann::ordered_json::array();
  out.push_back(hk::to_json(laplace));
  out.push_back(hk::to_json(heat));
  std::cout << out.dump(2) << "\n";
  return laplace.pass() && heat.pass() ? kOk : kCheckFailed;
}

int oracle_sphere(const OracleOptions& opt) {
  const hk::oracle::Extraction e = hk::oracle::extract_coefficients({opt.n, opt.radius}, opt.k_max);
  nlohmann::ordered_json out;
  out["n"] = opt.n;
  out["radius"] = opt.radius;
  out["approx_a"] = e.approx;
  out["error_estimates"] = e.error;
  std::cout << out.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heat kernel coefficients of homogeneous bundles over symmetric spaces"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, std::string("Worker threads (default from ") + hk::kThreadsEnvVar + ")");

  ComputeOptions compute_opt;
  auto* compute_cmd = app.add_subcommand("compute", "Compute a_0 ... a_kmax for a job file");
  compute_cmd->add_option("job", compute_opt.path, "Job file")->required()->check(CLI::ExistingFile);
  compute_cmd->add_option("-k,--kmax", compute_opt.k_max, "Highest coefficient (overrides the job)");
  compute_cmd->add_option("--output", compute_opt.output, "exact, decimal or both")
      ->check(CLI::IsMember({"exact", "decimal", "both"}));
  compute_cmd->add_flag("--trace", compute_opt.trace, "Add the traced invariants A_k");
  compute_cmd->add_flag("--table", compute_opt.table, "Print a text table instead of JSON");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Run the exact algebra and bundle checks");
  validate_cmd->add_option("job", validate_path, "Job file")->required()->check(CLI::ExistingFile);

  GroupOptions group_opt;
  auto* group_cmd = app.add_subcommand("check-group", "Floating-point checks of the curvature group identities");
  group_cmd->add_option("job", group_opt.path, "Job file")->required()->check(CLI::ExistingFile);
  group_cmd->add_option("--samples", group_opt.samples, "Points for the Laplace identity");
  group_cmd->add_option("--heat-samples", group_opt.heat_samples, "Points for the heat equation");
  group_cmd->add_option("--radius", group_opt.radius, "Sampling radius");
  group_cmd->add_option("-t,--time", group_opt.t, "Time for the heat equation check");
  group_cmd->add_option("--step", group_opt.step, "Finite-difference step in [1e-4, 1e-2]");
  group_cmd->add_option("--seed", group_opt.seed, "Sampling seed");
  group_cmd->add_option("--laplace-tolerance", group_opt.laplace_tolerance, "Pass threshold for the Laplace identity");
  group_cmd->add_option("--heat-tolerance", group_opt.heat_tolerance, "Pass threshold for the heat equation");

  OracleOptions oracle_opt;
  auto* oracle_cmd = app.add_subcommand("oracle", "Independent reference values");
  oracle_cmd->require_subcommand(1);
  auto* sphere_cmd = oracle_cmd->add_subcommand("sphere", "Coefficients fitted to the sphere spectral sum");
  sphere_cmd->add_option("--n", oracle_opt.n, "Sphere dimension")->check(CLI::Range(2, 12));
  sphere_cmd->add_option("--kmax", oracle_opt.k_max, "Highest coefficient (at most 4)")->check(CLI::Range(0, 4));
  sphere_cmd->add_option("--radius", oracle_opt.radius, "Sphere radius")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  if (threads > 0) hk::set_thread_count(threads);

  try {
    if (*compute_cmd) return compute(compute_opt);
    if (*validate_cmd) return validate(validate_path);
    if (*group_cmd) return check_group(group_opt);
    if (*sphere_cmd) return oracle_sphere(oracle_opt);
  } catch (const hk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const hk::TruncationOverflow& e) {
    std::cerr << "truncation overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (const hk::GroupTooLarge& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const hk::RadiusExceeded& e) {
    std::cerr << "group check: " << e.what() << "\n";
    return kDiagnostic;
  } catch (const hk::StepTooSmall& e) {
    std::cerr << "group check: " << e.what() << "\n";
    return kDiagnostic;
  } catch (const hk::SeriesDivergence& e) {
    std::cerr << "group check: " << e.what() << "\n";
    return kDiagnostic;
  } catch (const hk::ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const hk::RepError& e) {
    std::cerr << "bundle error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
