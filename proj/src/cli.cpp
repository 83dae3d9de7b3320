#include "mrange/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mrange/errors.hpp"
#include "mrange/io.hpp"
#include "mrange/range.hpp"
#include "mrange/selftest.hpp"

namespace mrange::cli {

namespace {

using io::Json;

enum class Output { Json, Text };

struct Request {
  std::string command;
  std::optional<std::string> function;
  std::optional<std::string> matrix;
  std::optional<std::string> value;
  std::optional<int> n;
  std::string output = "json";
  std::uint64_t seed = kDefaultSeed;
};

std::string read_source(const std::string& arg, std::istream& in, bool allow_stdin, const char* what) {
  const auto first = std::find_if_not(arg.begin(), arg.end(), [](unsigned char c) { return std::isspace(c); });
  if (first != arg.end() && (*first == '{' || *first == '[')) return arg;
  if (arg == "-") {
    if (!allow_stdin) throw ParseError(std::string("stdin is only accepted for --matrix, not for ") + what);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream file(arg);
  if (!file) throw ParseError(std::string("cannot read ") + what + " file \"" + arg + "\"");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

template <class T>
const T& require(const std::optional<T>& opt, const Request& req, const char* flag) {
  if (!opt) throw ParseError("command \"" + req.command + "\" requires " + flag);
  return *opt;
}

EntireFunction load_function(const Request& req, std::istream& in) {
  const auto text = read_source(require(req.function, req, "--function"), in, false, "function");
  return io::function_from_json(io::parse_json(text));
}

MatrixQi load_matrix(const Request& req, std::istream& in) {
  const auto text = read_source(require(req.matrix, req, "--matrix"), in, true, "matrix");
  return io::matrix_from_json(io::parse_json(text));
}

std::string selftest_json(const SelftestReport& report, Json& out) {
  out["seed"] = report.seed;
  Json suites = Json::array();
  int passed = 0, failed = 0;
  for (const auto& s : report.suites) {
    Json entry;
    entry["name"] = s.name;
    entry["passed"] = s.passed;
    entry["failed"] = s.failed;
    if (s.failed > 0) entry["first_failure"] = s.first_failure;
    suites.push_back(std::move(entry));
    passed += s.passed;
    failed += s.failed;
  }
  out["suites"] = std::move(suites);
  out["passed"] = passed;
  out["failed"] = failed;
  return {};
}

struct Dispatch {
  Json out;
  int exit_code = kSuccess;
  std::optional<std::pair<std::string, std::string>> soft_error;  // kind, message
};

Dispatch dispatch(const Request& req, std::istream& in) {
  Dispatch d;
  const std::string& cmd = req.command;
  if (cmd == "analyze") {
    const auto f = load_function(req, in);
    validate(f);
    d.out = io::to_json(ramification_profile(f));
  } else if (cmd == "decide") {
    const auto f = load_function(req, in);
    const auto a = load_matrix(req, in);
    d.out = io::to_json(decide_range(f, a));
  } else if (cmd == "witness") {
    const auto f = load_function(req, in);
    const auto a = load_matrix(req, in);
    RangeVerdict verdict = decide_range(f, a);
    if (verdict.solvable) {
      try {
        verdict.witness = build_witness(f, a, verdict);
      } catch (const WitnessUnavailable& e) {
        d.exit_code = kPrecondition;
        d.soft_error = {{"witness_unavailable", e.what()}};
      }
    }
    d.out = io::to_json(verdict);
  } else if (cmd == "classify") {
    const auto a = load_matrix(req, in);
    const auto value = GaussianRational::parse(require(req.value, req, "--value"));
    const SegrePartition segre = segre_at(a, value);
    d.out["in_E"] = !segre.parts.empty();
    d.out["in_S"] = segre.nontrivial();
    Json parts = Json::array();
    for (int p : segre.parts) parts.push_back(p);
    d.out["segre_partition"] = std::move(parts);
  } else if (cmd == "evaluate") {
    const auto f = load_function(req, in);
    const auto a = load_matrix(req, in);
    d.out = io::to_json(apply_poly(f.as_polynomial(), a));
  } else if (cmd == "describe-range") {
    const auto f = load_function(req, in);
    d.out = io::to_json(describe_range(f, require(req.n, req, "--n")));
  } else if (cmd == "selftest") {
    const SelftestReport report = run_selftest(req.seed);
    selftest_json(report, d.out);
    if (!report.green()) {
      d.exit_code = kInternal;
      d.soft_error = {{"selftest_failed", "one or more selftest suites failed; rerun with --seed " + std::to_string(req.seed)}};
    }
  } else {
    throw ParseError("unknown command \"" + cmd + "\"");
  }
  return d;
}

std::string render(const Json& j, Output mode) { return mode == Output::Json ? j.dump() + "\n" : io::render_text(j); }

std::string render_error(const std::string& kind, const std::string& message, Output mode) {
  if (mode == Output::Text) return "error (" + kind + "): " + message + "\n";
  Json e;
  e["error"]["kind"] = kind;
  e["error"]["message"] = message;
  return e.dump() + "\n";
}

}  // namespace

CliResult run(const std::vector<std::string>& args, std::istream& stdin_stream) {
  Request req;
  CLI::App app{"Decide solvability of f(X) = A for entire functions f and matrices A over Q(i)", "mrange"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--function", req.function, "function: JSON file path or inline JSON");
  app.add_option("--matrix", req.matrix, "matrix: JSON file path, inline JSON, or - for stdin");
  app.add_option("--value", req.value, "scalar, e.g. 3 or 1/2-2i");
  app.add_option("--n", req.n, "matrix dimension")->check(CLI::PositiveNumber);
  app.add_option("--output", req.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", req.seed, "seed for randomised selftest suites");
  const std::vector<std::pair<const char*, const char*>> commands{
      {"analyze", "ramification profile of a function"},
      {"decide", "decide whether f(X) = A has a solution"},
      {"witness", "decide, and construct an exact X with f(X) = A"},
      {"classify", "Jordan structure of A at a value (membership in E_a and S_a)"},
      {"evaluate", "evaluate a polynomial function at a matrix"},
      {"describe-range", "Jordan structures excluded from the range in dimension n"},
      {"selftest", "run the built-in identity suites and split-pattern oracle grid"},
  };
  for (const auto& [name, desc] : commands) {
    app.add_subcommand(name, desc)->callback([&req, name = std::string(name)] { req.command = name; });
  }

  CliResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    result.exit_code = app.exit(e, out, err) == 0 ? kSuccess : kUsageOrParse;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  const Output mode = req.output == "text" ? Output::Text : Output::Json;
  try {
    Dispatch d = dispatch(req, stdin_stream);
    result.exit_code = d.exit_code;
    result.out = render(d.out, mode);
    if (d.soft_error) result.err = render_error(d.soft_error->first, d.soft_error->second, mode);
  } catch (const ParseError& e) {
    result.exit_code = kUsageOrParse;
    result.err = render_error("parse", e.what(), mode);
  } catch (const DomainError& e) {
    result.exit_code = kPrecondition;
    result.err = render_error("precondition", e.what(), mode);
  } catch (const InternalError& e) {
    result.exit_code = kInternal;
    result.err = render_error("internal", e.what(), mode);
  } catch (const std::exception& e) {
    result.exit_code = kInternal;
    result.err = render_error("internal", e.what(), mode);
  }
  return result;
}

}  // namespace mrange::cli
