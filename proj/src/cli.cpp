#include "realcyc/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "realcyc/digest.hpp"

namespace realcyc::cli {

namespace {

using Clock = std::chrono::steady_clock;

class StageTimer {
 public:
  explicit StageTimer(JobReport& report) : report_(report), start_(Clock::now()) {}

  void lap(const std::string& stage) {
    const auto now = Clock::now();
    report_.timing.emplace_back(stage, std::chrono::duration<double>(now - start_).count());
    start_ = now;
  }

 private:
  JobReport& report_;
  Clock::time_point start_;
};

void fail(JobReport& report, const Error& e) {
  report.outcome = std::string(to_string(e.kind()));
  report.exit_code = exit_code_for(e.kind());
  report.message = e.what();
}

std::size_t resolve_cap(const Representation& rep, std::optional<std::size_t> flag, bool file_has_cap) {
  if (flag) return *flag;
  if (file_has_cap) return rep.closure_cap;
  if (const char* env = std::getenv("REALCYC_CLOSURE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw Error(ErrorKind::InvalidArgument, std::string("REALCYC_CLOSURE_CAP is not a positive integer: ") + env);
  }
  return kDefaultClosureCap;
}

Representation load_representation(const std::string& path, JobReport& report, std::optional<std::size_t> cap) {
  const io::json j = io::read_json_file(path);
  report.input_digest = sha256_hex(j.dump());
  Representation rep = io::representation_from_json(j);
  rep.closure_cap = resolve_cap(rep, cap, j.contains("closure_cap") && !j.at("closure_cap").is_null());
  rep.validate();
  return rep;
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return 2;
    case ErrorKind::ClosureCapExceeded: return 3;
    case ErrorKind::QuaternionicType: return 4;
    case ErrorKind::NotRealValued: return 5;
    case ErrorKind::NotIrreducible: return 6;
    case ErrorKind::NormEquationNotSolved: return 7;
    case ErrorKind::VerificationFailed: return 8;
    case ErrorKind::ConductorMismatch:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NotSquare:
    case ErrorKind::Singular:
    case ErrorKind::NotDivisible: return 9;
    case ErrorKind::UnknownFixture: return 10;
    default: return 1;
  }
}

io::json to_json(const JobReport& report) {
  io::json timing = io::json::object();
  for (const auto& [stage, seconds] : report.timing) timing[stage] = seconds;
  io::json out = {{"command", report.command},
                  {"input_digest", report.input_digest},
                  {"outcome", report.outcome},
                  {"exit_code", report.exit_code},
                  {"payload", report.payload},
                  {"timing", timing}};
  if (!report.message.empty()) out["message"] = report.message;
  return out;
}

JobReport cmd_analyze(const std::string& path, std::optional<std::size_t> closure_cap) {
  JobReport report;
  report.command = "analyze";
  StageTimer timer(report);
  try {
    const Representation rep = load_representation(path, report, closure_cap);
    timer.lap("parse");
    const GroupClosure closure = group_closure(rep);
    timer.lap("closure");
    const auto chi = character(rep, closure);
    const Cyclotomic norm = char_inner(chi, chi, closure.order());
    const bool irreducible = norm.is_one();
    bool real_valued = true;
    for (const auto& c : chi) real_valued = real_valued && c.is_real();
    io::json nu2 = nullptr;
    if (irreducible) nu2 = frobenius_schur(rep, closure);
    timer.lap("characters");
    report.payload = {{"conductor", rep.conductor},
                      {"degree", rep.degree},
                      {"group_order", closure.order()},
                      {"char_inner", io::to_json(norm)},
                      {"char_inner_text", norm.to_string()},
                      {"irreducible", irreducible},
                      {"real_valued_character", real_valued},
                      {"nu2", nu2},
                      {"note", "group sums run over the matrix image of the generators"}};
  } catch (const Error& e) {
    fail(report, e);
  }
  return report;
}

JobReport cmd_realize(const std::string& path, const RealizeFlags& flags) {
  JobReport report;
  report.command = "realize";
  StageTimer timer(report);
  try {
    const Representation rep = load_representation(path, report, flags.closure_cap);
    timer.lap("parse");
    RealifyOptions options;
    options.norm.bound = flags.bound;
    options.xi_seed = flags.seed;
    const RealizationResult result = realify(rep, options);
    timer.lap("realify");
    const io::json j = io::to_json(result, flags.approx);
    if (flags.out) io::write_json_file(*flags.out, j);
    timer.lap("write");
    report.payload = j;
  } catch (const Error& e) {
    fail(report, e);
  }
  return report;
}

JobReport cmd_verify(const std::string& rep_path, const std::string& result_path) {
  JobReport report;
  report.command = "verify";
  StageTimer timer(report);
  try {
    const Representation rep = load_representation(rep_path, report, std::nullopt);
    const io::json rj = io::read_json_file(result_path);
    const io::ClaimedRealization claim = io::claimed_realization_from_json(rj);
    timer.lap("parse");
    if (claim.conductor != rep.conductor) {
      throw Error(ErrorKind::ConductorMismatch, "representation conductor " + std::to_string(rep.conductor) +
                                                    ", result conductor " + std::to_string(claim.conductor));
    }
    if (claim.Q.rows() != rep.degree || claim.Q.cols() != rep.degree ||
        claim.generators_real.size() != rep.generators.size()) {
      throw Error(ErrorKind::DimensionMismatch, "result shape does not match the representation");
    }

    io::json per_generator = io::json::array();
    std::string first_failure;
    auto record = [&](std::size_t index, bool pass, const std::string& reason, io::json entry) {
      per_generator.push_back({{"index", index}, {"pass", pass}, {"reason", reason}, {"entry", entry}});
      if (!pass && first_failure.empty()) first_failure = "generator " + std::to_string(index) + ": " + reason;
    };

    if (det(claim.Q).is_zero()) {
      report.payload = {{"pass", false}, {"generators", per_generator}, {"reason", "Singular"}};
      throw Error(ErrorKind::VerificationFailed, "Singular: Q is not invertible");
    }
    const CycMatrix Qinv = inverse(claim.Q);
    for (std::size_t i = 0; i < rep.generators.size(); ++i) {
      const CycMatrix& g = rep.generators[i];
      const CycMatrix h = Qinv * g * claim.Q;
      const CycMatrix& claimed = claim.generators_real[i];
      std::string reason;
      io::json entry = nullptr;
      for (std::size_t r = 0; r < h.rows() && reason.empty(); ++r) {
        for (std::size_t c = 0; c < h.cols() && reason.empty(); ++c) {
          if (!h(r, c).is_real()) {
            reason = "entry not conj-fixed: " + h(r, c).to_string();
            entry = {r, c};
          } else if (claimed.rows() != h.rows() || claimed.cols() != h.cols()) {
            reason = "claimed generator has the wrong shape";
          } else if (claimed(r, c) != h(r, c)) {
            reason = "claimed entry " + claimed(r, c).to_string() + " differs from recomputed " + h(r, c).to_string();
            entry = {r, c};
          }
        }
      }
      if (reason.empty() && trace(h) != trace(g)) reason = "trace not preserved";
      record(i, reason.empty(), reason, entry);
    }
    timer.lap("verify");
    report.payload = {{"pass", first_failure.empty()}, {"generators", per_generator}};
    if (!first_failure.empty()) throw Error(ErrorKind::VerificationFailed, first_failure);
  } catch (const Error& e) {
    fail(report, e);
  }
  return report;
}

JobReport cmd_examples(const std::string& name, int m, int k, const std::optional<std::string>& out) {
  JobReport report;
  report.command = "examples";
  try {
    const Representation rep = fixture(name, m, k);
    const io::json j = io::to_json(rep);
    report.input_digest = sha256_hex(j.dump());
    if (out) io::write_json_file(*out, j);
    report.payload = j;
  } catch (const Error& e) {
    fail(report, e);
  }
  return report;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact realification of real-type representations over cyclotomic fields"};
  app.require_subcommand(1);

  std::string analyze_path;
  std::optional<std::size_t> analyze_cap;
  auto* analyze = app.add_subcommand("analyze", "Group order, [chi,chi] and Frobenius-Schur indicator");
  analyze->add_option("file", analyze_path, "Representation JSON")->required();
  analyze->add_option("--closure-cap", analyze_cap, "Maximum group order to enumerate");

  std::string realize_path;
  RealizeFlags flags;
  auto* realize = app.add_subcommand("realize", "Conjugate a real-type representation into the real subfield");
  realize->add_option("file", realize_path, "Representation JSON")->required();
  realize->add_option("--bound", flags.bound, "Coordinate bound for the norm-equation search")->check(CLI::NonNegativeNumber);
  realize->add_option("--closure-cap", flags.closure_cap, "Maximum group order to enumerate");
  realize->add_option("--out", flags.out, "Write the RealizationResult JSON here");
  realize->add_option("--seed", flags.seed, "Draw xi candidates from a seeded generator");
  realize->add_flag("--approx", flags.approx, "Add decimal renderings next to exact values");

  std::string verify_rep;
  std::string verify_result;
  auto* verify = app.add_subcommand("verify", "Independently re-check a claimed realization");
  verify->add_option("rep", verify_rep, "Representation JSON")->required();
  verify->add_option("result", verify_result, "RealizationResult JSON")->required();

  std::string example_name;
  int example_m = 0;
  int example_k = 1;
  std::optional<std::string> example_out;
  auto* examples = app.add_subcommand("examples", "Emit a built-in representation");
  examples->add_option("name", example_name, "dihedral | quaternion | cyclic_linear | dihedral_real")->required();
  examples->add_option("m", example_m, "Order parameter");
  examples->add_option("k", example_k, "Exponent for cyclic_linear");
  examples->add_option("--out", example_out, "Write the representation JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  JobReport report;
  if (*analyze) {
    report = cmd_analyze(analyze_path, analyze_cap);
  } else if (*realize) {
    report = cmd_realize(realize_path, flags);
  } else if (*verify) {
    report = cmd_verify(verify_rep, verify_result);
  } else {
    report = cmd_examples(example_name, example_m, example_k, example_out);
    if (!example_out && report.exit_code == 0) {
      out << io::canonical_dump(report.payload);
      return 0;
    }
  }
  out << io::canonical_dump(to_json(report));
  if (report.exit_code != 0) err << report.message << "\n";
  return report.exit_code;
}

}  // namespace realcyc::cli
