#include "sumur/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "sumur/error.hpp"
#include "sumur/io.hpp"

namespace sumur {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to `path`, or to `out` when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

double to_radians(double v, bool degrees) { return degrees ? v * std::numbers::pi / 180.0 : v; }

std::pair<std::size_t, std::size_t> parse_n_range(const std::string& s) {
  const auto dots = s.find("..");
  const auto number = [&](std::string_view part) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || p != part.data() + part.size()) {
      throw UsageError("--n-obs expects LO..HI, got '" + s + "'");
    }
    return v;
  };
  if (dots == std::string::npos) {
    const auto v = number(s);
    return {v, v};
  }
  std::string_view sv(s);
  return {number(sv.substr(0, dots)), number(sv.substr(dots + 2))};
}

struct Options {
  // bound
  std::string observables_path, state_path, out_path;
  // sweep / saturate / export-state
  std::string family, kind, bound;
  std::size_t points = 1000;
  std::vector<double> range;
  bool degrees = false;
  unsigned threads = 1;
  double theta = 0.0;
  bool as_density = false;
  // verify
  VerifyConfig verify;
  std::string n_obs = "2..6";
  // export-observables
  std::string set_name;
};

std::pair<double, double> resolve_range(const Options& o) {
  if (o.range.empty()) return {0.0, 2.0 * std::numbers::pi};
  return {to_radians(o.range[0], o.degrees), to_radians(o.range[1], o.degrees)};
}

int cmd_bound(const Options& o, std::ostream& out) {
  const auto obs = parse_observable_file(read_file(o.observables_path));
  const auto state = parse_state_file(read_file(o.state_path));
  const ObservableSet set(obs.observables);
  const auto report = bound_report(set, state);
  emit(o.out_path, report_json(report, obs.labels).dump(2) + "\n", out);
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  SweepSpec spec;
  spec.family = parse_family(o.family);
  spec.kind = parse_kind(o.kind);
  spec.points = o.points;
  std::tie(spec.theta_lo, spec.theta_hi) = resolve_range(o);
  std::ostringstream csv;
  write_sweep_csv(sweep(spec, o.threads), csv);
  emit(o.out_path, csv.str(), out);
  return kExitOk;
}

int cmd_saturate(const Options& o, std::ostream& out) {
  const auto [lo, hi] = resolve_range(o);
  const auto angles = find_saturation(parse_family(o.family), parse_kind(o.kind), parse_bound(o.bound), lo, hi);
  std::string text;
  for (double t : angles) text += format_angle(t) + "\n";
  emit(o.out_path, text, out);
  return kExitOk;
}

int cmd_verify(Options o, std::ostream& out, std::ostream& err) {
  std::tie(o.verify.n_lo, o.verify.n_hi) = parse_n_range(o.n_obs);
  o.verify.threads = o.threads;
  const auto summary = random_verify(o.verify);
  emit(o.out_path, summary_json(summary, o.verify).dump(2) + "\n", out);
  err << fmt::format("verify: {} trials, {} violations, {:.2f} s\n", summary.trials_run,
                     summary.violations.size(), summary.elapsed_seconds);
  return summary.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_export_observables(const Options& o, std::ostream& out) {
  ObservableFile f;
  if (o.set_name == "pauli") {
    f = {2, {pauli(Pauli::X), pauli(Pauli::Y), pauli(Pauli::Z)}, {"X", "Y", "Z"}};
  } else if (o.set_name == "spin1") {
    auto j = spin1_ops();
    f = {3, {j.x, j.y, j.z}, {"Jx", "Jy", "Jz"}};
  } else {
    throw UsageError("unknown observable set '" + o.set_name + "' (expected pauli or spin1)");
  }
  emit(o.out_path, observable_file_json(f).dump(2) + "\n", out);
  return kExitOk;
}

int cmd_export_state(const Options& o, std::ostream& out) {
  auto state = family_state(parse_family(o.family), to_radians(o.theta, o.degrees));
  if (o.as_density) state = as_mixed(state);
  emit(o.out_path, state_file_json(state).dump(2) + "\n", out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum uncertainty relations for N observables: bounds, sweeps, saturation search, verification",
               "sumur"};
  app.require_subcommand(1);
  Options o;

  auto* bound = app.add_subcommand("bound", "Evaluate every bound for an observable set and a state");
  bound->add_option("--observables", o.observables_path, "Observable file (JSON)")->required();
  bound->add_option("--state", o.state_path, "State file (JSON)")->required();
  bound->add_option("--out", o.out_path, "Write the report here instead of stdout");

  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate a reference family over theta as CSV");
  sweep_cmd->add_option("--family", o.family, "qubit-paper | qutrit-paper")->required();
  sweep_cmd->add_option("--kind", o.kind, "variance | stddev")->required();
  sweep_cmd->add_option("--points", o.points, "Grid size (>= 2)")->capture_default_str();
  sweep_cmd->add_option("--range", o.range, "Half-open theta range LO HI")->expected(2);
  sweep_cmd->add_flag("--degrees", o.degrees, "Interpret --range in degrees");
  sweep_cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
  sweep_cmd->add_option("--out", o.out_path, "Write the CSV here instead of stdout");

  auto* saturate = app.add_subcommand("saturate", "List the angles where a bound is attained");
  saturate->add_option("--family", o.family, "qubit-paper | qutrit-paper")->required();
  saturate->add_option("--kind", o.kind, "variance | stddev")->required();
  saturate->add_option("--bound", o.bound, "cb1 | cb3 | tb1 | tb2")->required();
  saturate->add_option("--range", o.range, "Half-open theta range LO HI")->expected(2);
  saturate->add_flag("--degrees", o.degrees, "Interpret --range in degrees");
  saturate->add_option("--out", o.out_path, "Write the angles here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Randomized falsification run over every inequality");
  verify->add_option("--trials", o.verify.trials, "Number of random instances")->capture_default_str();
  verify->add_option("--seed", o.verify.seed, "Base seed")->capture_default_str();
  verify->add_option("--dims", o.verify.dims, "Hilbert space dimensions, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--n-obs", o.n_obs, "Observable count range LO..HI")->capture_default_str();
  verify->add_option("--tolerance", o.verify.tolerance, "Allowed negative slack")->capture_default_str();
  verify->add_option("--mixed-frac", o.verify.mixed_frac, "Fraction of mixed-state trials")->capture_default_str();
  verify->add_option("--eigen-frac", o.verify.eigenstate_frac, "Fraction of common-eigenstate trials")
      ->capture_default_str();
  verify->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
  verify->add_option("--out", o.out_path, "Write the summary here instead of stdout");

  auto* export_obs = app.add_subcommand("export-observables", "Write a built-in observable set as a file");
  export_obs->add_option("--set", o.set_name, "pauli | spin1")->required();
  export_obs->add_option("--out", o.out_path, "Output path (default stdout)");

  auto* export_state = app.add_subcommand("export-state", "Write a reference-family state as a file");
  export_state->add_option("--family", o.family, "qubit-paper | qutrit-paper")->required();
  export_state->add_option("--theta", o.theta, "Family parameter (radians unless --degrees)")->required();
  export_state->add_flag("--degrees", o.degrees, "Interpret --theta in degrees");
  export_state->add_flag("--density", o.as_density, "Write the density-matrix form");
  export_state->add_option("--out", o.out_path, "Output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (*bound) return cmd_bound(o, out);
    if (*sweep_cmd) return cmd_sweep(o, out);
    if (*saturate) return cmd_saturate(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*export_obs) return cmd_export_observables(o, out);
    if (*export_state) return cmd_export_state(o, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace sumur
