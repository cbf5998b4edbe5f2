#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lauricella/special.hpp"

namespace lauricella::cli {

enum class Command { eval_2f1, eval_fa, verify_lemma1, verify_lemma2, verify_lemma3, eval_q, residual };
enum class OutputFormat { json, csv, plain };
enum class Method { direct, recursive, decomposed };

std::string to_string(Command c);
std::string to_string(OutputFormat f);
std::string to_string(Method m);
Command parse_command(const std::string& s);
OutputFormat parse_format(const std::string& s);
Method parse_method(const std::string& s);

/// Comma-separated list of reals. Throws parameter_error on junk.
std::vector<double> parse_list(const std::string& s);

struct RunConfig {
  Command command = Command::eval_fa;

  // F_A / 2F1 / summation parameters. Empty b or c means "all ones".
  std::optional<int> n;
  double a = 1.0;
  std::vector<double> b;
  std::vector<double> c;
  std::vector<double> z;
  Method method = Method::direct;
  bool relaxed = false;
  double t = 0.0009765625;  // 2^-10

  // PDE
  int m = 3;
  std::vector<double> alpha;
  int k = 0;
  std::vector<double> x;
  std::vector<double> xi;
  double h = 1e-3;

  std::optional<double> tol;  // identity tolerance override
  int random = 0;  // > 0: seeded random instances instead of the given parameters
  std::uint64_t seed = 0;

  SeriesControl control;
  OutputFormat format = OutputFormat::json;
  bool timing = false;

  bool operator==(const RunConfig&) const = default;
};

struct Gap {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs = 0.0;
  double rel = 0.0;
  double tolerance = 0.0;

  bool operator==(const Gap&) const = default;
};

struct Report {
  RunConfig config;  // the concrete parameters of this run
  double value = 0.0;
  double est_error = 0.0;
  int weight_used = 0;
  bool converged = true;
  std::optional<Gap> gap;
  int status = 0;
  std::optional<double> wall_time_s;
};

/// Builds a RunConfig from argv. Config file values (--config, or the file named by
/// LAURICELLA_CONFIG) override defaults and flags override the file.
/// Throws parameter_error on usage errors.
RunConfig parse_args(int argc, const char* const* argv);

/// Runs the command. Randomized runs give one report per instance.
/// Throws lauricella::error on input errors.
std::vector<Report> run(const RunConfig& cfg);

std::string csv_header();
/// One line (json, csv) or a small block (plain), newline terminated.
std::string format_report(const Report& r, OutputFormat f);
/// Inverse of the JSON form.
Report parse_report(const std::string& json_line);

/// Full front end: parse, run, print. Returns the exit status.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lauricella::cli
