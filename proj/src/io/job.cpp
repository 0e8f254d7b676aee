#include "hk/io/job.hpp"

#include "hk/errors.hpp"

#include <fstream>
#include <sstream>

namespace hk {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError((where.empty() ? std::string("/") : where) + ": " + what);
}

const json& member(const json& object, const std::string& key, const std::string& where) {
  if (!object.is_object()) fail(where, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) fail(where + "/" + key, "missing required field");
  return *it;
}

std::size_t parse_count(const json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return value.get<std::size_t>();
}

Rational parse_rational_json(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected a rational as \"p/q\" or an integer");
}

std::string type_of(const json& value, const std::string& where) {
  if (value.is_string()) return value.get<std::string>();
  const json& t = member(value, "type", where);
  if (!t.is_string()) fail(where + "/type", "expected a string");
  return t.get<std::string>();
}

SpaceSpec parse_space_spec(const json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_space_name(value.get<std::string>());
    } catch (const ParseError& e) {
      fail(where, e.what());
    }
  }
  const std::string type = type_of(value, where);
  auto radius = [&]() -> Rational {
    return value.contains("radius") ? parse_rational_json(value["radius"], where + "/radius") : Rational(1);
  };
  if (type == "sphere") return SphereSpec{parse_count(member(value, "n", where), where + "/n"), radius()};
  if (type == "hyperbolic") return HyperbolicSpec{parse_count(member(value, "n", where), where + "/n"), radius()};
  if (type == "flat") return FlatSpec{parse_count(member(value, "n", where), where + "/n")};
  if (type == "product") {
    const json& factors = member(value, "factors", where);
    if (!factors.is_array() || factors.empty()) fail(where + "/factors", "expected a non-empty array");
    ProductSpec p;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      p.factors.push_back(parse_space_spec(factors[j], where + "/factors/" + std::to_string(j)));
    }
    return p;
  }
  fail(where + "/type", "unknown space type '" + type + "'");
}

SpaceSource parse_space(const json& value, const std::string& where) {
  if (value.is_object() && value.value("type", "") == "explicit") {
    CurvatureData d;
    d.n = parse_count(member(value, "n", where), where + "/n");
    d.flat_dim = value.contains("flat_dim") ? parse_count(value["flat_dim"], where + "/flat_dim") : 0;
    const json& E = member(value, "E", where);
    if (!E.is_array()) fail(where + "/E", "expected an array of matrices");
    for (std::size_t j = 0; j < E.size(); ++j) d.E.push_back(parse_matrix(E[j], where + "/E/" + std::to_string(j)));
    d.beta = d.E.empty() && !value.contains("beta") ? Matrix(0, 0) : parse_matrix(member(value, "beta", where), where + "/beta");
    return d;
  }
  return parse_space_spec(value, where);
}

RepSpec parse_rep_spec(const json& value, const std::string& where) {
  const std::string type = type_of(value, where);
  if (type == "scalar") return ScalarRepSpec{};
  if (type == "vector") return VectorRepSpec{};
  if (type == "spinor") return SpinorRepSpec{};
  if (type == "u1_twist") {
    U1TwistSpec u;
    if (value.is_object() && value.contains("blocks")) {
      const json& blocks = value["blocks"];
      if (!blocks.is_array()) fail(where + "/blocks", "expected an array");
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        u.strengths.push_back(parse_rational_json(blocks[j], where + "/blocks/" + std::to_string(j)));
      }
    }
    return u;
  }
  if (type == "tensor_product") {
    const json& factors = member(value, "factors", where);
    if (!factors.is_array() || factors.empty()) fail(where + "/factors", "expected a non-empty array");
    TensorProductSpec t;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      t.factors.push_back(parse_rep_spec(factors[j], where + "/factors/" + std::to_string(j)));
    }
    return t;
  }
  fail(where + "/type", "unknown bundle type '" + type + "'");
}

BundleSource parse_bundle(const json& value, const std::string& where, std::size_t n_hint) {
  if (!(value.is_object() && value.value("type", "") == "explicit")) return parse_rep_spec(value, where);
  const std::size_t dim = parse_count(member(value, "dimV", where), where + "/dimV");
  const std::size_t n = value.contains("n") ? parse_count(value["n"], where + "/n") : n_hint;
  if (n == 0) fail(where, "explicit bundle needs 'n' when the space dimension is unknown");
  GeneratorTable G(n, dim);
  const json& gens = member(value, "G", where);
  if (!gens.is_object()) fail(where + "/G", "expected an object keyed by \"a,b\"");
  for (const auto& [key, matrix] : gens.items()) {
    const std::string at = where + "/G/" + key;
    std::size_t a = 0;
    std::size_t b = 0;
    char comma = 0;
    std::istringstream is(key);
    if (!(is >> a >> comma >> b) || comma != ',' || !is.eof()) fail(at, "key must be \"a,b\" with 1-based indices");
    if (a < 1 || b < 1 || a > n || b > n || a == b) fail(at, "indices out of range");
    const Matrix m = parse_matrix(matrix, at);
    if (m.rows() != dim || m.cols() != dim) fail(at, "generator must be dimV x dimV");
    G.set(a - 1, b - 1, m);
  }
  return G;
}

std::size_t space_dimension(const SpaceSource& space) {
  if (const auto* d = std::get_if<CurvatureData>(&space)) return d->n;
  try {
    return catalog_data(std::get<SpaceSpec>(space)).n;
  } catch (const ModelError&) {
    return 0;
  }
}

}  // namespace

SpaceSpec parse_space_name(const std::string& name) {
  std::vector<std::string> parts;
  std::string current;
  std::size_t depth = 0;
  for (char c : name) {
    if (c == '(') ++depth;
    if (c == ')' && depth > 0) --depth;
    if (c == 'x' && depth == 0 && !current.empty()) {
      parts.push_back(current);
      current.clear();
      continue;
    }
    current += c;
  }
  parts.push_back(current);

  auto single = [&](const std::string& part) -> SpaceSpec {
    auto number = [&](const std::string& digits) -> std::size_t {
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("bad space name '" + name + "'");
      }
      return std::stoul(digits);
    };
    if (part.rfind("flat(", 0) == 0 && part.back() == ')') return FlatSpec{number(part.substr(5, part.size() - 6))};
    if (part.size() >= 2 && part[0] == 'S') return SphereSpec{number(part.substr(1)), Rational(1)};
    if (part.size() >= 2 && part[0] == 'H') return HyperbolicSpec{number(part.substr(1)), Rational(1)};
    throw ParseError("bad space name '" + name + "'");
  };
  if (parts.size() == 1) return single(parts.front());
  ProductSpec p;
  for (const auto& part : parts) p.factors.push_back(single(part));
  return p;
}

Scalar parse_scalar(const json& value, const std::string& where) {
  if (value.is_object()) {
    const Rational re = value.contains("re") ? parse_rational_json(value["re"], where + "/re") : Rational(0);
    const Rational im = value.contains("im") ? parse_rational_json(value["im"], where + "/im") : Rational(0);
    return Scalar(re, im);
  }
  return Scalar(parse_rational_json(value, where));
}

Matrix parse_matrix(const json& value, const std::string& where) {
  if (!value.is_array()) fail(where, "expected a matrix as an array of rows");
  const std::size_t rows = value.size();
  const std::size_t cols = rows == 0 ? 0 : (value[0].is_array() ? value[0].size() : 0);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_at = where + "/" + std::to_string(r);
    if (!value[r].is_array() || value[r].size() != cols) fail(row_at, "rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = parse_scalar(value[r][c], row_at + "/" + std::to_string(c));
  }
  return m;
}

Job parse_job(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail("", "job must be a JSON object");

  Job job;
  job.space = parse_space(member(doc, "space", ""), "/space");
  if (doc.contains("bundle")) job.bundle = parse_bundle(doc["bundle"], "/bundle", space_dimension(job.space));
  if (doc.contains("twist")) {
    const json& blocks = member(doc["twist"], "blocks", "/twist");
    if (!blocks.is_array()) fail("/twist/blocks", "expected an array");
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      job.twist.push_back(parse_rational_json(blocks[j], "/twist/blocks/" + std::to_string(j)));
    }
  }
  if (doc.contains("k_max")) job.k_max = parse_count(doc["k_max"], "/k_max");
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) fail("/output", "expected a string");
    try {
      job.output = parse_output_mode(doc["output"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail("/output", e.what());
    }
  }
  if (doc.contains("volume")) {
    const json& v = doc["volume"];
    Volume vol;
    if (v.is_object()) {
      vol.coefficient = parse_rational_json(member(v, "coefficient", "/volume"), "/volume/coefficient");
      if (v.contains("pi_power")) {
        if (!v["pi_power"].is_number_integer()) fail("/volume/pi_power", "expected an integer");
        vol.pi_power = v["pi_power"].get<int>();
      }
    } else {
      vol.coefficient = parse_rational_json(v, "/volume");
    }
    if (sgn(vol.coefficient) <= 0) fail("/volume", "volume must be positive");
    job.volume = vol;
  }
  return job;
}

Job load_job(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read job file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_job(buffer.str());
}

SymmetricSpaceModel build_space(const Job& job) {
  if (const auto* d = std::get_if<CurvatureData>(&job.space)) return build_model(*d);
  return catalog_space(std::get<SpaceSpec>(job.space));
}

FiberRep build_bundle(const Job& job, const SymmetricSpaceModel& model) {
  if (const auto* spec = std::get_if<RepSpec>(&job.bundle)) return catalog_rep(model, *spec, job.twist);
  Matrix B = u1_twist_field(model.n(), model.flat_dim(), job.twist);
  return build_rep(model, std::get<GeneratorTable>(job.bundle), std::move(B));
}

std::optional<Volume> job_volume(const Job& job) {
  if (job.volume) return job.volume;
  if (const auto* spec = std::get_if<SpaceSpec>(&job.space)) {
    if (const auto* s = std::get_if<SphereSpec>(spec)) return sphere_volume(s->n, s->radius);
  }
  return std::nullopt;
}

}  // namespace hk
