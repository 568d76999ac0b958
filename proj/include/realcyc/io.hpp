#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "realcyc/realify.hpp"

namespace realcyc::io {

using json = nlohmann::json;

// Cyclotomic: [[exponent, numerator, denominator], ...], exponents strictly
// increasing in [0, phi(n)), zero terms omitted. Integers that do not fit in
// 64 bits are written as decimal strings.
json to_json(const Cyclotomic& a);
Cyclotomic cyclotomic_from_json(const json& j, int conductor);

// Matrix: {"rows": r, "cols": c, "entries": [cyclotomic, ...]} row-major.
json to_json(const CycMatrix& m);
CycMatrix matrix_from_json(const json& j, int conductor);

// Representation: {"conductor", "degree", "generators", "closure_cap"?}.
json to_json(const Representation& rep);
Representation representation_from_json(const json& j);

/// RealizationResult JSON. `approx` adds a decimal rendering of Q and the
/// real generators next to the exact values.
json to_json(const RealizationResult& result, bool approx = false);

/// The fields of a realization file that verification needs.
struct ClaimedRealization {
  int conductor = 1;
  CycMatrix Q;
  std::vector<CycMatrix> generators_real;
};
ClaimedRealization claimed_realization_from_json(const json& j);

/// Reads and parses a JSON file; failures raise ParseError.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);

}  // namespace realcyc::io
