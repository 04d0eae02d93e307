#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "csgauge/cli.hpp"
#include "csgauge/cs_energy.hpp"
#include "csgauge/limit_problem.hpp"
#include "csgauge/minimizer.hpp"
#include "csgauge/phase_sweep.hpp"
#include "csgauge/verification.hpp"
#include "json.hpp"

namespace csgauge::cli {
namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

struct GlobalFlags {
  bool json = false;
  std::string out;
  std::uint64_t seed = verification::Options{}.seed;
};

std::string fixed6(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 6);
  return std::string(buf.data(), res.ptr);
}

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

json breakdown_json(const EnergyBreakdown& e) {
  return {{"kinetic", e.kinetic}, {"mass", e.mass}, {"nonlocal", e.nonlocal}, {"potential", e.potential},
          {"total", e.total}};
}

void finish(const std::string& command, std::map<std::string, std::string> parameters,
            std::vector<std::string> artifacts, Clock::time_point start) {
  if (artifacts.empty()) return;
  RunManifest manifest{command, std::move(parameters), artifacts, seconds_since(start), version()};
  const auto path = manifest_path_for(artifacts.front());
  manifest.artifacts.push_back(path.string());
  write_manifest(path, manifest);
}

// ---------------------------------------------------------------- threshold

struct ThresholdArgs {
  double p = 2.0;
};

int cmd_threshold(const ThresholdArgs& args, const GlobalFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  const Thresholds t = thresholds(args.p);
  const double k0 = degenerate_root(args.p);
  json j{{"p", t.p}, {"m", t.m}, {"omega0", t.omega0}, {"omega1", t.omega1}, {"omega_bar", t.omega_bar}, {"k0", k0}};
  std::string text;
  if (flags.json) {
    text = j.dump(2) + "\n";
  } else {
    text = "p=" + format_csv_number(t.p) + "\nm=" + fixed6(t.m) + "\nomega0=" + fixed6(t.omega0) +
           "\nomega1=" + fixed6(t.omega1) + "\nomega_bar=" + fixed6(t.omega_bar) + "\nk0=" + fixed6(k0) +
           "\nroots: two for 0 < omega < omega1, one (k0) at omega = omega1, none above\n";
  }
  out << text;
  if (!flags.out.empty()) {
    write_text_file(flags.out, j.dump(2) + "\n");
    finish("threshold", {{"p", format_csv_number(args.p)}}, {flags.out}, start);
  }
  return kOk;
}

// -------------------------------------------------------------------- sweep

struct SweepArgs {
  double pmin = 1.1;
  double pmax = 2.9;
  std::size_t steps = 180;
};

int cmd_sweep(const SweepArgs& args, const GlobalFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  const std::string csv = sweep_csv(compute_sweep(args.pmin, args.pmax, args.steps));
  if (flags.out.empty()) {
    out << csv;
    return kOk;
  }
  write_text_file(flags.out, csv);
  finish("sweep",
         {{"pmin", format_csv_number(args.pmin)},
          {"pmax", format_csv_number(args.pmax)},
          {"steps", std::to_string(args.steps)}},
         {flags.out}, start);
  out << "wrote " << args.steps + 1 << " rows to " << flags.out << "\n";
  return kOk;
}

// ------------------------------------------------------------------ soliton

struct SolitonArgs {
  double p = 2.0;
  std::string omega = "omega0";
  std::string which = "k2";
  std::size_t n = 8000;
  double half_width = 0.0;  // 0: 40/sqrt(k)
};

int cmd_soliton(const SolitonArgs& args, const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const CsParams params(args.p, parse_omega(args.omega, args.p));
  const RootReport roots = solve_eq_k(params);
  std::optional<double> k;
  if (args.which == "k0") {
    k = degenerate_root(args.p);
  } else if (args.which == "k1") {
    k = roots.k1;
  } else if (args.which == "k2") {
    k = roots.k2;
  } else {
    throw std::domain_error("--which must be one of k0, k1, k2");
  }
  if (!k) {
    err << "root " << args.which << " is not available at omega = " << format_csv_number(params.omega())
        << " (omega1 = " << format_csv_number(omega1(args.p)) << ", " << roots.count << " root(s))\n";
    return kRootUnavailable;
  }
  const SolitonParams sp(args.p, *k);
  const double half = args.half_width > 0.0 ? args.half_width : default_soliton_half_width(*k);
  const Mesh1D mesh = Mesh1D::centered(half, args.n);
  std::string csv = "r,w,wprime\n";
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const double r = mesh.node(i);
    csv += format_csv_number(r) + ',' + format_csv_number(soliton_wk(sp, r)) + ',' +
           format_csv_number(soliton_wk_prime(sp, r)) + '\n';
  }
  if (flags.out.empty()) {
    out << csv;
    return kOk;
  }
  write_text_file(flags.out, csv);
  finish("soliton",
         {{"p", format_csv_number(args.p)},
          {"omega", format_csv_number(params.omega())},
          {"which", args.which},
          {"k", format_csv_number(*k)},
          {"n", std::to_string(args.n)},
          {"half_width", format_csv_number(half)}},
         {flags.out}, start);
  out << "wrote " << args.which << " = " << format_csv_number(*k) << " profile to " << flags.out << "\n";
  return kOk;
}

// ----------------------------------------------------------------- minimize

struct MinimizeArgs {
  double p = 2.0;
  std::string omega;
  double radius = 100.0;
  std::size_t n = 0;  // 0: radius / 0.05
  std::string init = "zero_plus_bump";
  std::size_t max_iters = 20000;
  double grad_tol = 1e-6;
  double step_init = 1.0;
  std::string summary;
};

InitialGuess parse_init(const std::string& text) {
  if (text == "zero_plus_bump") return ZeroPlusBump{};
  const std::string prefix = "translated_soliton:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      return TranslatedSoliton{std::stod(text.substr(prefix.size()))};
    } catch (const std::exception&) {
    }
  }
  throw std::domain_error("--init must be zero_plus_bump or translated_soliton:<rho>");
}

int cmd_minimize(const MinimizeArgs& args, const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  if (flags.out.empty()) throw std::domain_error("minimize needs --out <profile.csv>");
  const CsParams params(args.p, parse_omega(args.omega, args.p));
  MinimizeConfig cfg;
  cfg.radius = args.radius;
  cfg.n = args.n > 0 ? args.n : static_cast<std::size_t>(std::ceil(args.radius / 0.05));
  cfg.max_iters = args.max_iters;
  cfg.grad_tol = args.grad_tol;
  cfg.step_init = args.step_init;
  cfg.init = parse_init(args.init);

  std::optional<MinimizeResult> found;
  try {
    found = minimize_on_ball(params, cfg);
  } catch (const DivergenceError& e) {
    const std::string trace_path = flags.out + ".trace.csv";
    std::string trace = "iter,energy\n";
    for (std::size_t i = 0; i < e.energy_trace().size(); ++i) {
      trace += std::to_string(i) + ',' + format_csv_number(e.energy_trace()[i]) + '\n';
    }
    write_text_file(trace_path, trace);
    err << e.what() << "; energy trace written to " << trace_path << "\n";
    return kDiverged;
  }
  const MinimizeResult& res = *found;

  std::string csv = "r,u\n";
  for (std::size_t i = 0; i < res.u.size(); ++i) {
    csv += format_csv_number(res.u.mesh().node(i)) + ',' + format_csv_number(res.u[i]) + '\n';
  }
  write_text_file(flags.out, csv);

  json summary{{"p", params.p()},
               {"omega", params.omega()},
               {"radius", cfg.radius},
               {"n", cfg.n},
               {"init", args.init},
               {"energy", breakdown_json(res.energy)},
               {"initial_energy", res.initial_energy},
               {"grad_norm", res.grad_norm},
               {"centroid_xi", res.centroid_xi},
               {"l2_mass", res.l2_mass},
               {"iters", res.iters},
               {"converged", res.converged}};
  const std::string summary_path = args.summary.empty() ? flags.out + ".summary.json" : args.summary;
  write_text_file(summary_path, summary.dump(2) + "\n");
  finish("minimize",
         {{"p", format_csv_number(params.p())},
          {"omega", format_csv_number(params.omega())},
          {"radius", format_csv_number(cfg.radius)},
          {"n", std::to_string(cfg.n)},
          {"init", args.init},
          {"max_iters", std::to_string(cfg.max_iters)},
          {"grad_tol", format_csv_number(cfg.grad_tol)},
          {"step_init", format_csv_number(cfg.step_init)}},
         {flags.out, summary_path}, start);
  if (flags.json) {
    out << summary.dump(2) << "\n";
  } else {
    out << "energy=" << format_csv_number(res.energy.total) << " iters=" << res.iters
        << " grad_norm=" << format_csv_number(res.grad_norm) << " converged=" << (res.converged ? "true" : "false")
        << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  bool full = false;
  std::string inject_fault;
};

int cmd_verify(const VerifyArgs& args, const GlobalFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  verification::Options options;
  options.level = args.full ? verification::Level::full : verification::Level::fast;
  options.seed = flags.seed;
  if (!args.inject_fault.empty()) {
    if (args.inject_fault != "omega0") throw std::domain_error("unknown fault '" + args.inject_fault + "'");
    options.tamper_omega0 = true;
  }
  const auto results = verification::run(options);
  json report = json::array();
  std::vector<std::string> failed;
  for (const auto& r : results) {
    report.push_back({{"name", r.name},
                      {"measured", r.measured},
                      {"tolerance", r.tolerance},
                      {"passed", r.passed},
                      {"detail", r.detail}});
    if (!r.passed) failed.push_back(r.name);
  }
  if (flags.json) {
    out << report.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << "  measured=" << format_csv_number(r.measured)
          << "  tolerance=" << format_csv_number(r.tolerance) << "\n";
    }
    out << results.size() - failed.size() << "/" << results.size() << " checks passed\n";
  }
  if (!failed.empty()) {
    out << "failed:";
    for (const auto& name : failed) out << " " << name;
    out << "\n";
  }
  if (!flags.out.empty()) {
    write_text_file(flags.out, report.dump(2) + "\n");
    finish("verify", {{"level", args.full ? "full" : "fast"}, {"seed", std::to_string(flags.seed)}}, {flags.out},
           start);
  }
  return failed.empty() ? kOk : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chern-Simons-Schroedinger radial energy thresholds, solitons and ball minimization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));
  GlobalFlags flags;
  app.add_flag("--json", flags.json, "Machine-readable JSON output");
  app.add_option("--out", flags.out, "Output artifact path");
  app.add_option("--seed", flags.seed, "Seed for the randomized verification suites");
  app.fallthrough();

  ThresholdArgs threshold_args;
  auto* threshold = app.add_subcommand("threshold", "m, omega0, omega1 and omega_bar for an exponent p");
  threshold->add_option("--p", threshold_args.p, "Nonlinearity exponent")->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Thresholds over a range of p (CSV)");
  sweep->add_option("--pmin", sweep_args.pmin, "Smallest exponent")->capture_default_str();
  sweep->add_option("--pmax", sweep_args.pmax, "Largest exponent")->capture_default_str();
  sweep->add_option("--steps", sweep_args.steps, "Number of intervals")->capture_default_str();

  SolitonArgs soliton_args;
  auto* soliton = app.add_subcommand("soliton", "Export a limit-problem soliton r,w,wprime (CSV)");
  soliton->add_option("--p", soliton_args.p, "Nonlinearity exponent")->required();
  soliton->add_option("--omega", soliton_args.omega, "Frequency (number, omega0, omega1, 0.8*omega1, ...)")
      ->required();
  soliton->add_option("--which", soliton_args.which, "Root: k1, k2 or k0")->capture_default_str();
  soliton->add_option("--n", soliton_args.n, "Number of intervals")->capture_default_str();
  soliton->add_option("--half-width", soliton_args.half_width, "Half width L of [-L, L] (default 40/sqrt(k))");

  MinimizeArgs minimize_args;
  auto* minimize = app.add_subcommand("minimize", "Minimize the energy on a Dirichlet ball");
  minimize->add_option("--p", minimize_args.p, "Nonlinearity exponent")->required();
  minimize->add_option("--omega", minimize_args.omega, "Frequency")->required();
  minimize->add_option("--radius", minimize_args.radius, "Ball radius R")->capture_default_str();
  minimize->add_option("--n", minimize_args.n, "Grid intervals (default R/0.05)");
  minimize->add_option("--init", minimize_args.init, "zero_plus_bump or translated_soliton:<rho>")
      ->capture_default_str();
  minimize->add_option("--max-iters", minimize_args.max_iters, "Iteration cap")->capture_default_str();
  minimize->add_option("--grad-tol", minimize_args.grad_tol, "Gradient max-norm tolerance")->capture_default_str();
  minimize->add_option("--step-init", minimize_args.step_init, "Initial step length")->capture_default_str();
  minimize->add_option("--summary", minimize_args.summary, "Summary JSON path (default <out>.summary.json)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  auto* fast_flag = verify->add_flag("--fast", "Quick suite (default)");
  auto* full_flag = verify->add_flag("--full", verify_args.full, "Quick suite plus minimization checks");
  fast_flag->excludes(full_flag);
  verify->add_option("--inject-fault", verify_args.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }

  try {
    if (*threshold) return cmd_threshold(threshold_args, flags, out);
    if (*sweep) return cmd_sweep(sweep_args, flags, out);
    if (*soliton) return cmd_soliton(soliton_args, flags, out, err);
    if (*minimize) return cmd_minimize(minimize_args, flags, out, err);
    if (*verify) return cmd_verify(verify_args, flags, out);
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kDomainError;
  }
  return kDomainError;
}

}  // namespace csgauge::cli
