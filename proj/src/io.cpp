#include "realcyc/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "realcyc/approx.hpp"

namespace realcyc::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) parse_error("bad integer string '" + j.get<std::string>() + "'");
    return z;
  }
  parse_error("expected an integer, got " + j.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    parse_error(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

json approx_matrix(const CycMatrix& m) {
  json out = json::array();
  for (const auto& e : m.entries()) out.push_back(approx_string(e));
  return out;
}

}  // namespace

json to_json(const Cyclotomic& a) {
  json out = json::array();
  const auto& c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    out.push_back(json::array({i, integer_to_json(c[i].get_num()), integer_to_json(c[i].get_den())}));
  }
  return out;
}

Cyclotomic cyclotomic_from_json(const json& j, int conductor) {
  if (!j.is_array()) parse_error("cyclotomic must be a list of [exponent, numerator, denominator]");
  const int phi = euler_phi(conductor);
  std::vector<Rational> coeffs(static_cast<std::size_t>(phi));
  long last = -1;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3) parse_error("cyclotomic term must be a triple, got " + term.dump());
    if (!term[0].is_number_integer()) parse_error("exponent must be an integer");
    const auto e = term[0].get<std::int64_t>();
    if (e < 0 || e >= phi) parse_error("exponent " + std::to_string(e) + " outside [0, phi(n))");
    if (e <= last) parse_error("exponents must be strictly increasing");
    last = e;
    const Integer num = integer_from_json(term[1]);
    const Integer den = integer_from_json(term[2]);
    if (den <= 0) parse_error("denominator must be positive");
    if (num == 0) parse_error("zero terms must be omitted");
    Rational q(num, den);
    q.canonicalize();
    coeffs[static_cast<std::size_t>(e)] = q;
  }
  return Cyclotomic::from_coeffs(conductor, coeffs);
}

json to_json(const CycMatrix& m) {
  json entries = json::array();
  for (const auto& e : m.entries()) entries.push_back(to_json(e));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

CycMatrix matrix_from_json(const json& j, int conductor) {
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows * cols) {
    parse_error("matrix needs rows*cols = " + std::to_string(rows * cols) + " entries");
  }
  CycMatrix m(conductor, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    m(k / cols, k % cols) = cyclotomic_from_json(entries[k], conductor);
  }
  return m;
}

json to_json(const Representation& rep) {
  json gens = json::array();
  for (const auto& g : rep.generators) gens.push_back(to_json(g));
  json out = {{"conductor", rep.conductor}, {"degree", rep.degree}, {"generators", gens}};
  if (rep.closure_cap != kDefaultClosureCap) out["closure_cap"] = rep.closure_cap;
  return out;
}

Representation representation_from_json(const json& j) {
  const std::size_t conductor = size_field(j, "conductor");
  if (conductor < 1) parse_error("conductor must be at least 1");
  Representation rep;
  rep.conductor = static_cast<int>(conductor);
  rep.degree = size_field(j, "degree");
  if (rep.degree < 1) parse_error("degree must be at least 1");
  const json& gens = field(j, "generators");
  if (!gens.is_array()) parse_error("generators must be a list");
  for (const auto& g : gens) {
    CycMatrix m = matrix_from_json(g, rep.conductor);
    if (m.rows() != rep.degree || m.cols() != rep.degree) parse_error("generator shape does not match degree");
    rep.generators.push_back(std::move(m));
  }
  if (j.contains("closure_cap") && !j.at("closure_cap").is_null()) {
    rep.closure_cap = size_field(j, "closure_cap");
    if (rep.closure_cap < 1) parse_error("closure_cap must be positive");
  }
  return rep;
}

json to_json(const RealizationResult& result, bool approx) {
  const auto& d = result.diagnostics;
  json gens = json::array();
  for (const auto& g : result.conjugated_generators) gens.push_back(to_json(g));

  json diagnostics = {
      {"nu2", d.nu2 ? json(*d.nu2) : json(nullptr)},
      {"group_order", d.group_order ? json(*d.group_order) : json(nullptr)},
      {"mu", d.mu ? to_json(*d.mu) : json(nullptr)},
      {"xi", to_json(d.xi)},
      {"xi_attempts", d.xi_attempts},
      {"norm_strategy", d.norm_solution ? json(std::string(to_string(d.norm_solution->strategy))) : json("none")},
      {"norm_solution", d.norm_solution ? to_json(d.norm_solution->x) : json(nullptr)},
      {"M", d.M ? to_json(*d.M) : json(nullptr)},
      {"Sigma", d.Sigma ? to_json(*d.Sigma) : json(nullptr)},
      {"P", d.P_raw ? to_json(*d.P_raw) : json(nullptr)},
      {"P_normalized", d.P_normalized ? to_json(*d.P_normalized) : json(nullptr)},
      {"shortcut", d.shortcut ? json(*d.shortcut) : json(nullptr)},
  };
  json rejected = json::array();
  for (const auto& xi : d.rejected_xi) rejected.push_back(to_json(xi));
  diagnostics["rejected_xi"] = rejected;

  json out = {{"conductor", result.conductor},
              {"degree", result.degree},
              {"Q", to_json(result.Q)},
              {"generators_real", gens},
              {"diagnostics", diagnostics}};
  if (approx) {
    json approx_gens = json::array();
    for (const auto& g : result.conjugated_generators) approx_gens.push_back(approx_matrix(g));
    out["approx"] = {{"Q", approx_matrix(result.Q)}, {"generators_real", approx_gens}};
  }
  return out;
}

ClaimedRealization claimed_realization_from_json(const json& j) {
  ClaimedRealization out;
  const std::size_t conductor = size_field(j, "conductor");
  if (conductor < 1) parse_error("conductor must be at least 1");
  out.conductor = static_cast<int>(conductor);
  out.Q = matrix_from_json(field(j, "Q"), out.conductor);
  const json& gens = field(j, "generators_real");
  if (!gens.is_array()) parse_error("generators_real must be a list");
  for (const auto& g : gens) out.generators_real.push_back(matrix_from_json(g, out.conductor));
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << canonical_dump(j);
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace realcyc::io
