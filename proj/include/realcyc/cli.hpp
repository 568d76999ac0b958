#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "realcyc/io.hpp"

namespace realcyc::cli {

/// Stable process exit codes.
int exit_code_for(ErrorKind kind) noexcept;

struct JobReport {
  std::string command;
  std::string input_digest;
  std::string outcome = "success";  // or the ErrorKind name
  int exit_code = 0;
  std::string message;
  io::json payload;
  std::vector<std::pair<std::string, double>> timing;  // seconds per stage
};

io::json to_json(const JobReport& report);

struct RealizeFlags {
  long bound = 4;
  std::optional<std::size_t> closure_cap;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  bool approx = false;
};

JobReport cmd_analyze(const std::string& path, std::optional<std::size_t> closure_cap = std::nullopt);
JobReport cmd_realize(const std::string& path, const RealizeFlags& flags = {});
JobReport cmd_verify(const std::string& rep_path, const std::string& result_path);
JobReport cmd_examples(const std::string& name, int m, int k, const std::optional<std::string>& out);

/// Entry point used by the `realcyc` binary.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace realcyc::cli
