#include "lauricella/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lauricella/error.hpp"
#include "lauricella/identities.hpp"
#include "lauricella/lauricella.hpp"
#include "lauricella/pde.hpp"

namespace lauricella::cli {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::pair<Command, std::string>> kCommands = {
    {Command::eval_2f1, "eval-2f1"},           {Command::eval_fa, "eval-fa"},
    {Command::verify_lemma1, "verify-lemma1"}, {Command::verify_lemma2, "verify-lemma2"},
    {Command::verify_lemma3, "verify-lemma3"}, {Command::eval_q, "eval-q"},
    {Command::residual, "residual"},
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// json has no inf/nan; write them as strings so they survive the trip back
json real(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double real_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw parameter_error("not a number in report: " + s);
}

json reals(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(real(x));
  return out;
}

std::vector<double> reals_from(const json& j) {
  std::vector<double> out;
  for (const auto& e : j) out.push_back(real_from(e));
  return out;
}

bool uses_fa_params(Command c) {
  return c == Command::eval_2f1 || c == Command::eval_fa || c == Command::verify_lemma1 ||
         c == Command::verify_lemma3;
}
bool uses_pde(Command c) { return c == Command::eval_q || c == Command::residual; }

json inputs_json(const RunConfig& cfg) {
  json in;
  const Command c = cfg.command;
  if (uses_pde(c)) {
    in["m"] = cfg.m;
    in["alpha"] = reals(cfg.alpha);
    in["k"] = cfg.k;
    in["x"] = reals(cfg.x);
    in["xi"] = reals(cfg.xi);
    if (c == Command::residual) in["step"] = real(cfg.h);
  } else {
    if (cfg.n) in["n"] = *cfg.n;
    in["a"] = real(cfg.a);
    in["b"] = reals(cfg.b);
    if (uses_fa_params(c)) in["c"] = reals(cfg.c);
    if (c == Command::eval_2f1 || c == Command::eval_fa || c == Command::verify_lemma1) in["z"] = reals(cfg.z);
    if (c == Command::eval_fa) {
      in["method"] = to_string(cfg.method);
      in["relaxed"] = cfg.relaxed;
    }
    if (c == Command::verify_lemma3) in["t"] = real(cfg.t);
  }
  if (cfg.tol) in["tol"] = real(*cfg.tol);
  in["seed"] = cfg.seed;
  in["control"] = json{{"max_weight", cfg.control.max_weight},
                       {"rel_tol", real(cfg.control.rel_tol)},
                       {"plateau", cfg.control.plateau},
                       {"inner_max_weight", cfg.control.inner_max_weight}};
  return in;
}

void inputs_from(const json& in, RunConfig& cfg) {
  if (in.contains("n")) cfg.n = in["n"].get<int>();
  if (in.contains("a")) cfg.a = real_from(in["a"]);
  if (in.contains("b")) cfg.b = reals_from(in["b"]);
  if (in.contains("c")) cfg.c = reals_from(in["c"]);
  if (in.contains("z")) cfg.z = reals_from(in["z"]);
  if (in.contains("method")) cfg.method = parse_method(in["method"].get<std::string>());
  if (in.contains("relaxed")) cfg.relaxed = in["relaxed"].get<bool>();
  if (in.contains("t")) cfg.t = real_from(in["t"]);
  if (in.contains("m")) cfg.m = in["m"].get<int>();
  if (in.contains("alpha")) cfg.alpha = reals_from(in["alpha"]);
  if (in.contains("k")) cfg.k = in["k"].get<int>();
  if (in.contains("x")) cfg.x = reals_from(in["x"]);
  if (in.contains("xi")) cfg.xi = reals_from(in["xi"]);
  if (in.contains("step")) cfg.h = real_from(in["step"]);
  if (in.contains("tol")) cfg.tol = real_from(in["tol"]);
  if (in.contains("seed")) cfg.seed = in["seed"].get<std::uint64_t>();
  if (in.contains("control")) {
    const auto& c = in["control"];
    cfg.control.max_weight = c.at("max_weight").get<int>();
    cfg.control.rel_tol = real_from(c.at("rel_tol"));
    cfg.control.plateau = c.at("plateau").get<int>();
    cfg.control.inner_max_weight = c.at("inner_max_weight").get<int>();
  }
}

std::string inputs_plain(const json& in) {
  std::string s;
  for (auto it = in.begin(); it != in.end(); ++it) {
    if (!s.empty()) s += ' ';
    s += it.key() + '=';
    const auto& v = it.value();
    if (v.is_array()) {
      std::string list;
      for (const auto& e : v) list += (list.empty() ? "" : ",") + (e.is_number() ? num(e.get<double>()) : e.dump());
      s += list;
    } else if (v.is_object()) {
      s += v.dump();
    } else if (v.is_number_float()) {
      s += num(v.get<double>());
    } else if (v.is_string()) {
      s += v.get<std::string>();
    } else {
      s += v.dump();
    }
  }
  return s;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

// ---- normalization and validation ----

void need(bool ok, const std::string& what) {
  if (!ok) throw parameter_error(what);
}

void fill_ones(std::vector<double>& v, std::size_t size, const char* name) {
  if (v.empty()) v.assign(size, 1.0);
  need(v.size() == size, std::string(name) + " has " + std::to_string(v.size()) + " entries, expected " +
                             std::to_string(size));
}

// Fills defaulted vectors and pins n to the vector length.
RunConfig normalized(RunConfig cfg) {
  cfg.control.validate();
  const Command c = cfg.command;
  if (c == Command::eval_2f1) {
    need(cfg.z.size() == 1, "eval-2f1 needs a single z");
    fill_ones(cfg.b, 1, "b");
    fill_ones(cfg.c, 1, "c");
    cfg.n.reset();
  } else if (c == Command::eval_fa || c == Command::verify_lemma1) {
    need(!cfg.z.empty(), "z must have at least one entry");
    const auto size = static_cast<std::size_t>(cfg.n.value_or(static_cast<int>(cfg.z.size())));
    need(cfg.z.size() == size, "z has " + std::to_string(cfg.z.size()) + " entries but n = " + std::to_string(size));
    fill_ones(cfg.b, size, "b");
    fill_ones(cfg.c, size, "c");
    cfg.n = static_cast<int>(size);
  } else if (c == Command::verify_lemma2) {
    need(!cfg.b.empty(), "b must have at least one entry");
    need(!cfg.n || *cfg.n == static_cast<int>(cfg.b.size()),
         "b has " + std::to_string(cfg.b.size()) + " entries but n = " + std::to_string(*cfg.n));
    cfg.n = static_cast<int>(cfg.b.size());
  } else if (c == Command::verify_lemma3) {
    need(!cfg.b.empty(), "b must have at least one entry");
    const auto size = static_cast<std::size_t>(cfg.n.value_or(static_cast<int>(cfg.b.size())));
    need(cfg.b.size() == size, "b has " + std::to_string(cfg.b.size()) + " entries but n = " + std::to_string(size));
    fill_ones(cfg.c, size, "c");
    cfg.n = static_cast<int>(size);
    need(cfg.t > 0.0 && cfg.t <= 1.0, "t = " + num(cfg.t) + " is not in (0, 1]");
  } else {
    need(!cfg.n || *cfg.n == static_cast<int>(cfg.alpha.size()),
         "alpha has " + std::to_string(cfg.alpha.size()) + " entries but n = " + std::to_string(cfg.n.value_or(0)));
    cfg.n.reset();
    need(cfg.h > 0.0, "step must be positive");
  }
  if (cfg.tol) need(*cfg.tol > 0.0, "tol must be positive");
  if (c != Command::eval_fa) {
    cfg.method = Method::direct;
    cfg.relaxed = false;
  }
  cfg.random = 0;
  return cfg;
}

// ---- seeded instances ----

double uniform(std::mt19937_64& rng, double lo, double hi) {
  // fixed mapping so reports do not depend on the standard library's distributions
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

RunConfig random_lemma1(const RunConfig& base, std::mt19937_64& rng) {
  RunConfig cfg = base;
  const int n = base.n.value_or(2);
  cfg.a = uniform(rng, 0.1, 2.0);
  cfg.b.assign(static_cast<std::size_t>(n), 0.0);
  cfg.c.assign(static_cast<std::size_t>(n), 0.0);
  cfg.z.assign(static_cast<std::size_t>(n), 0.0);
  for (auto& v : cfg.b) v = uniform(rng, 0.1, 2.0);
  for (auto& v : cfg.c) v = uniform(rng, 0.5, 3.0);
  double total = 0.0;
  for (auto& v : cfg.z) total += (v = uniform(rng, 0.0, 1.0));
  const double target = uniform(rng, 0.0, 0.5);
  for (auto& v : cfg.z) v *= target / total;
  cfg.n = n;
  return cfg;
}

RunConfig random_lemma2(const RunConfig& base, std::mt19937_64& rng) {
  RunConfig cfg = base;
  const int n = base.n.value_or(2);
  cfg.b.assign(static_cast<std::size_t>(n), 0.0);
  double total = 0.0;
  for (auto& v : cfg.b) total += (v = uniform(rng, 0.2, 1.5));
  cfg.a = total + uniform(rng, 2.0, 3.0);
  cfg.n = n;
  return cfg;
}

// ---- commands ----

Gap make_gap(double lhs, double rhs, double abs_gap, double tolerance) {
  Gap g;
  g.lhs = lhs;
  g.rhs = rhs;
  g.abs = abs_gap;
  g.rel = rhs != 0.0 ? abs_gap / std::abs(rhs) : abs_gap;
  g.tolerance = tolerance;
  return g;
}

void take(Report& r, const EvalResult& e) {
  r.value = e.value;
  r.est_error = e.est_error;
  r.weight_used = e.weight_used;
  r.converged = e.converged;
}

Report run_one(const RunConfig& cfg) {
  Report r;
  r.config = cfg;
  const auto& ctl = cfg.control;
  const LauricellaParams fa{cfg.a, cfg.b, cfg.c};
  switch (cfg.command) {
    case Command::eval_2f1:
      take(r, gauss_2f1(cfg.a, cfg.b[0], cfg.c[0], cfg.z[0], ctl));
      break;
    case Command::eval_fa: {
      const auto check = cfg.relaxed ? DomainCheck::relaxed : DomainCheck::strict;
      switch (cfg.method) {
        case Method::direct: take(r, fa_direct(fa, cfg.z, ctl, check)); break;
        case Method::recursive: take(r, fa_recursive(fa, cfg.z, ctl, check)); break;
        case Method::decomposed: take(r, fa_decomposed(fa, cfg.z, ctl, check)); break;
      }
      break;
    }
    case Command::verify_lemma1: {
      const auto dec = fa_decomposed(fa, cfg.z, ctl);
      const auto rec = fa_recursive(fa, cfg.z, ctl);
      const auto dir = fa_direct(fa, cfg.z, ctl);
      take(r, dec);
      r.converged = dec.converged && rec.converged && dir.converged;
      const double spread = std::max({std::abs(dec.value - rec.value), std::abs(dec.value - dir.value),
                                      std::abs(rec.value - dir.value)});
      const double rel = cfg.tol.value_or(1e-9);
      r.gap = make_gap(dec.value, dir.value, spread, rel * std::abs(dir.value));
      break;
    }
    case Command::verify_lemma2: {
      const SummationParams sp{cfg.a, cfg.b};
      const auto lhs = lemma2_lhs(sp, ctl);
      const double rhs = lemma2_rhs(sp);
      take(r, lhs);
      const double tolerance =
          cfg.tol ? *cfg.tol * std::abs(rhs) : std::max(lhs.est_error, 1e-3 * std::abs(rhs));
      r.gap = make_gap(lhs.value, rhs, std::abs(lhs.value - rhs), tolerance);
      break;
    }
    case Command::verify_lemma3: {
      const auto lhs = lemma3_lhs(fa, cfg.t, ctl);
      const double rhs = lemma3_rhs(fa);
      take(r, lhs);
      r.gap = make_gap(lhs.value, rhs, std::abs(lhs.value - rhs), cfg.tol.value_or(1e-2) * std::abs(rhs));
      break;
    }
    case Command::eval_q: {
      const SingularPdeConfig pc{cfg.m, cfg.alpha};
      take(r, fundamental_solution(pc, cfg.k, PointPair{cfg.x, cfg.xi}, ctl));
      break;
    }
    case Command::residual: {
      const SingularPdeConfig pc{cfg.m, cfg.alpha};
      const auto rc = residual_check(pc, cfg.k, cfg.x, cfg.xi, cfg.h, ctl);
      r.value = rc.residual;
      r.est_error = 0.0;
      r.weight_used = 0;
      r.converged = rc.converged;
      r.gap = make_gap(rc.operator_value, 0.0, std::abs(rc.operator_value), cfg.tol.value_or(1e-4) * rc.scale);
      r.gap->rel = rc.residual;
      break;
    }
  }
  if (r.gap) r.status = r.gap->abs <= r.gap->tolerance ? 0 : 2;
  return r;
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::plain: return "plain";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::recursive: return "recursive";
    case Method::decomposed: return "decomposed";
  }
  return "?";
}

Command parse_command(const std::string& s) {
  for (const auto& [cmd, name] : kCommands) {
    if (name == s) return cmd;
  }
  throw parameter_error("unknown command '" + s + "'");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "plain") return OutputFormat::plain;
  throw parameter_error("unknown format '" + s + "' (json, csv, plain)");
}

Method parse_method(const std::string& s) {
  if (s == "direct") return Method::direct;
  if (s == "recursive") return Method::recursive;
  if (s == "decomposed") return Method::decomposed;
  throw parameter_error("unknown method '" + s + "' (direct, recursive, decomposed)");
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    auto rest = item.substr(used);
    need(used > 0 && rest.find_first_not_of(" \t") == std::string::npos, "cannot read '" + item + "' as a number");
    out.push_back(v);
  }
  return out;
}

namespace {

struct HelpRequested {
  std::string text;
};

RunConfig parse_args_impl(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"Lauricella F_A evaluation and identity checks", "lauricella"};
  std::string command, format = "json", method = "direct";
  int n = 0;
  double tol = 0.0;
  app.add_option("command", command, "eval-2f1 | eval-fa | verify-lemma1 | verify-lemma2 | verify-lemma3 | eval-q | residual")
      ->required();
  app.set_config("--config", "", "key=value file; defaults to $LAURICELLA_CONFIG")->envname("LAURICELLA_CONFIG");
  auto* n_opt = app.add_option("--n", n, "number of variables");
  app.add_option("--a", cfg.a);
  app.add_option("--b", cfg.b, "comma list")->delimiter(',');
  app.add_option("--c", cfg.c, "comma list")->delimiter(',');
  app.add_option("--z", cfg.z, "comma list")->delimiter(',');
  app.add_option("--method", method, "direct | recursive | decomposed");
  app.add_flag("--relaxed", cfg.relaxed, "skip the sum |z| < 1 check");
  app.add_option("--t", cfg.t, "left-shift parameter for verify-lemma3");
  app.add_option("--m", cfg.m, "space dimension");
  app.add_option("--alpha", cfg.alpha, "comma list")->delimiter(',');
  app.add_option("--k", cfg.k);
  app.add_option("--x", cfg.x, "comma list")->delimiter(',');
  app.add_option("--xi", cfg.xi, "comma list")->delimiter(',');
  app.add_option("--step", cfg.h, "relative finite-difference step for residual");
  auto* tol_opt = app.add_option("--tol", tol, "relative tolerance for verify/residual");
  app.add_option("--random", cfg.random, "number of seeded random instances (verify-lemma1/2)");
  app.add_option("--seed", cfg.seed);
  app.add_option("--max-weight", cfg.control.max_weight);
  app.add_option("--rel-tol", cfg.control.rel_tol);
  app.add_option("--plateau", cfg.control.plateau);
  app.add_option("--inner-max-weight", cfg.control.inner_max_weight);
  app.add_option("--format", format, "json | csv | plain");
  app.add_flag("--timing", cfg.timing, "add wall time to reports");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw parameter_error(e.what());
  }
  cfg.command = parse_command(command);
  cfg.format = parse_format(format);
  cfg.method = parse_method(method);
  if (n_opt->count() > 0) {
    need(n >= 1, "n must be at least 1");
    cfg.n = n;
  }
  if (tol_opt->count() > 0) cfg.tol = tol;
  need(cfg.random >= 0, "random must be nonnegative");
  need(cfg.random == 0 || cfg.command == Command::verify_lemma1 || cfg.command == Command::verify_lemma2,
       "--random applies to verify-lemma1 and verify-lemma2 only");
  return cfg;
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
  try {
    return parse_args_impl(argc, argv);
  } catch (const HelpRequested&) {
    throw parameter_error("help requested");
  }
}

std::vector<Report> run(const RunConfig& cfg) {
  std::vector<RunConfig> jobs;
  if (cfg.random > 0) {
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.random; ++i) {
      jobs.push_back(cfg.command == Command::verify_lemma1 ? random_lemma1(cfg, rng) : random_lemma2(cfg, rng));
    }
  } else {
    jobs.push_back(cfg);
  }
  std::vector<Report> out;
  for (auto& job : jobs) {
    job = normalized(job);
    const auto start = std::chrono::steady_clock::now();
    auto r = run_one(job);
    if (cfg.timing) r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string csv_header() {
  return "command,inputs,value,est_error,weight_used,converged,gap_lhs,gap_rhs,gap_abs,gap_rel,gap_tolerance,status,"
         "wall_time_s\n";
}

std::string format_report(const Report& r, OutputFormat f) {
  const json in = inputs_json(r.config);
  if (f == OutputFormat::json) {
    json j;
    j["command"] = to_string(r.config.command);
    j["inputs"] = in;
    j["value"] = real(r.value);
    j["est_error"] = real(r.est_error);
    j["weight_used"] = r.weight_used;
    j["converged"] = r.converged;
    if (r.gap) {
      j["gap"] = json{{"lhs", real(r.gap->lhs)},
                      {"rhs", real(r.gap->rhs)},
                      {"abs", real(r.gap->abs)},
                      {"rel", real(r.gap->rel)},
                      {"tolerance", real(r.gap->tolerance)}};
    }
    j["status"] = r.status;
    if (r.wall_time_s) j["wall_time_s"] = *r.wall_time_s;
    return j.dump() + '\n';
  }
  if (f == OutputFormat::csv) {
    std::string s = to_string(r.config.command) + ',' + csv_quote(in.dump()) + ',' + num(r.value) + ',' +
                    num(r.est_error) + ',' + std::to_string(r.weight_used) + ',' + (r.converged ? "true" : "false");
    if (r.gap) {
      s += ',' + num(r.gap->lhs) + ',' + num(r.gap->rhs) + ',' + num(r.gap->abs) + ',' + num(r.gap->rel) + ',' +
           num(r.gap->tolerance);
    } else {
      s += ",,,,,";
    }
    s += ',' + std::to_string(r.status) + ',';
    if (r.wall_time_s) s += num(*r.wall_time_s);
    return s + '\n';
  }
  std::string s = to_string(r.config.command) + "  " + inputs_plain(in) + '\n';
  s += "  value " + num(r.value) + "  est_error " + num(r.est_error) + "  weight " + std::to_string(r.weight_used) +
       (r.converged ? "" : "  (not converged)") + '\n';
  if (r.gap) {
    s += "  lhs " + num(r.gap->lhs) + "  rhs " + num(r.gap->rhs) + "  |gap| " + num(r.gap->abs) + "  rel " +
         num(r.gap->rel) + "  tolerance " + num(r.gap->tolerance) + '\n';
  }
  s += std::string("  ") + (r.status == 0 ? "ok" : "FAIL");
  if (r.wall_time_s) s += "  " + num(*r.wall_time_s) + " s";
  return s + '\n';
}

Report parse_report(const std::string& json_line) {
  const json j = json::parse(json_line);
  Report r;
  r.config.command = parse_command(j.at("command").get<std::string>());
  inputs_from(j.at("inputs"), r.config);
  r.value = real_from(j.at("value"));
  r.est_error = real_from(j.at("est_error"));
  r.weight_used = j.at("weight_used").get<int>();
  r.converged = j.at("converged").get<bool>();
  if (j.contains("gap")) {
    const auto& g = j["gap"];
    r.gap = Gap{real_from(g.at("lhs")), real_from(g.at("rhs")), real_from(g.at("abs")), real_from(g.at("rel")),
                real_from(g.at("tolerance"))};
  }
  r.status = j.at("status").get<int>();
  if (j.contains("wall_time_s")) {
    r.wall_time_s = j["wall_time_s"].get<double>();
    r.config.timing = true;
  }
  return r;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args_impl(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const std::exception& e) {
    err << "lauricella: " << e.what() << '\n';
    return 1;
  }
  std::vector<Report> reports;
  try {
    reports = run(cfg);
  } catch (const std::exception& e) {
    err << "lauricella: " << to_string(cfg.command) << ": " << e.what() << '\n';
    return 1;
  }
  if (cfg.format == OutputFormat::csv) out << csv_header();
  int status = 0;
  for (const auto& r : reports) {
    out << format_report(r, cfg.format);
    status = std::max(status, r.status);
  }
  return status;
}

}  // namespace lauricella::cli
