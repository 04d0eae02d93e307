#include "csgauge/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "csgauge/cs_energy.hpp"
#include "csgauge/limit_problem.hpp"
#include "csgauge/minimizer.hpp"
#include "csgauge/phase_sweep.hpp"
#include "csgauge/scalar_solvers.hpp"

namespace csgauge::verification {
namespace {

std::string tag(double p) {
  std::string s = format_csv_number(p);
  return "p" + s;
}

CheckResult upper_bound(std::string name, double measured, double tolerance, std::string detail = {}) {
  return {std::move(name), measured, tolerance, std::isfinite(measured) && measured <= tolerance, std::move(detail)};
}

// Sum of a few Gaussian bumps, vanishing (to double precision) well before r = 20.
Field random_radial_field(const Mesh1D& mesh, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0), centre(0.0, 6.0), width(0.6, 2.0);
  std::uniform_int_distribution<int> count(1, 4);
  struct Bump { double a, c, s; };
  std::vector<Bump> bumps(static_cast<std::size_t>(count(rng)));
  for (auto& b : bumps) b = {amp(rng), centre(rng), width(rng)};
  Field u = Field::sample(mesh, [&](double r) {
    double v = 0.0;
    for (const auto& b : bumps) v += b.a * std::exp(-(r - b.c) * (r - b.c) / (b.s * b.s));
    return v;
  });
  u[mesh.intervals()] = 0.0;
  return u;
}

double line_zeros_distance(double p, double omega) {
  const CsParams params(p, omega);
  const RootReport roots = solve_eq_k(params);
  auto dpsi = [&](double k) {
    const double step = 1e-6 * k;
    return (psi_curve(k + step, params) - psi_curve(k - step, params)) / (2.0 * step);
  };
  std::vector<double> zeros;
  const int samples = 4000;
  double prev_k = 1e-4;
  double prev = dpsi(prev_k);
  for (int i = 1; i <= samples; ++i) {
    const double k = 1e-4 * std::pow(1e5, static_cast<double>(i) / samples);
    const double cur = dpsi(k);
    if (std::signbit(cur) != std::signbit(prev)) zeros.push_back(scalar::bisect(dpsi, prev_k, k, 1e-14));
    prev_k = k;
    prev = cur;
  }
  if (zeros.size() != 2 || roots.count != 2) return std::numeric_limits<double>::infinity();
  return std::max(std::abs(zeros[0] - *roots.k1), std::abs(zeros[1] - *roots.k2));
}

double sign_flip_distance(double p) {
  auto psi_at_k2 = [p](double omega) {
    const CsParams params(p, omega);
    return psi_curve(*solve_eq_k(params).k2, params);
  };
  const double w1 = omega1(p);
  const double flip = scalar::bisect(psi_at_k2, 0.05 * w1, 0.999 * w1, 1e-14);
  return std::abs(flip - omega0(p));
}

void fast_checks(const Options& options, std::vector<CheckResult>& out) {
  const double m2 = soliton_mass(2.0);
  double w0 = omega0(2.0);
  if (options.tamper_omega0) w0 *= 1.0 + 1e-6;
  out.push_back(upper_bound("p2_mass", std::abs(m2 - 6.0), 1e-8, "m(2) = 6"));
  out.push_back(upper_bound("p2_threshold_omega0", std::abs(w0 - 2.0 / (5.0 * std::sqrt(15.0))), 1e-9,
                            "omega0(2) = 2/(5 sqrt 15)"));
  out.push_back(upper_bound("p2_threshold_omega1", std::abs(omega1(2.0) - 2.0 / (9.0 * std::sqrt(3.0))), 1e-9,
                            "omega1(2) = 2/(9 sqrt 3)"));

  {
    double grid_max = -std::numeric_limits<double>::infinity();
    const int points = 1000000;
    for (int i = 1; i <= points; ++i) {
      const double t = 3.0 * i / points;
      grid_max = std::max(grid_max, t - 0.75 * t * t);
    }
    out.push_back(upper_bound("p2_omega_bar_grid", std::abs(nonexistence_threshold(2.0) - grid_max), 1e-10));
  }

  {
    const double p = 1.5;
    const double m = soliton_mass(p);
    const double e = (5.0 - p) / (p - 1.0);
    auto neg = [&](double k) { return -(k - 0.25 * m * m * std::pow(k, e)); };
    const double kmax = scalar::golden_min(neg, 1e-6, 10.0, 1e-12);
    out.push_back(upper_bound("omega1_tangency_p1.5", std::abs(-neg(kmax) - omega1(p)), 1e-9));
  }

  for (double p : {1.5, 2.0, 2.5}) {
    const CsParams params(p, omega0(p));
    out.push_back(upper_bound("omega0_system_" + tag(p), std::abs(psi_curve(*solve_eq_k(params).k2, params)), 1e-8));
  }

  {
    const SolitonParams sp(2.0, 1.0);
    out.push_back(upper_bound("hamiltonian_p2_k1", hamiltonian_residual(sp, Mesh1D::centered(40.0, 8000)), 1e-6));
    const auto [grad_sq, power] = soliton_relations(2.0);
    out.push_back(upper_bound("relations_p2", std::max(std::abs(grad_sq - 1.2), std::abs(power - 7.2)), 1e-7));
  }

  for (double p : {1.5, 2.0, 2.5}) {
    const CsParams params(p, 0.8 * omega1(p));
    const RootReport roots = solve_eq_k(params);
    double worst = 0.0;
    for (double k : {*roots.k1, *roots.k2}) {
      const Field w = sample_soliton({p, k}, Mesh1D::centered(default_soliton_half_width(k), 16000));
      worst = std::max(worst, limit_el_residual(w, params).max_abs());
    }
    out.push_back(upper_bound("limit_residual_roots_" + tag(p), worst, 1e-5));
    out.push_back(upper_bound("psi_duality_" + tag(p), line_zeros_distance(p, 0.8 * omega1(p)), 1e-6));
    out.push_back(upper_bound("psi_sign_flip_" + tag(p), sign_flip_distance(p), 1e-8));
  }

  out.push_back(upper_bound("k2_at_omega0_p2", std::abs(*solve_eq_k({2.0, omega0(2.0)}).k2 - 1.0 / std::sqrt(15.0)),
                            1e-10));

  std::mt19937_64 rng(options.seed);
  {
    const Mesh1D mesh(0.0, 20.0, 2000);
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100; ++i) worst = std::max(worst, -cs_inequality_gap(random_radial_field(mesh, rng)));
    out.push_back(upper_bound("inequality_random_fields", worst, 1e-8, "max over 100 fields of -(gap)"));
  }

  {
    const Mesh1D mesh(0.0, 20.0, 4000);
    const CsParams params(2.0, 0.3);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const Field u = random_radial_field(mesh, rng);
      const Field v = random_radial_field(mesh, rng);
      const auto grad = energy_I_gradient(u, params);
      double exact = 0.0;
      for (std::size_t j = 0; j < grad.size(); ++j) exact += grad[j] * v[j];
      const double eps = std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, u.max_abs()) / v.max_abs();
      Field up = u, um = u;
      for (std::size_t j = 0; j < u.size(); ++j) {
        up[j] += eps * v[j];
        um[j] -= eps * v[j];
      }
      const double fd = (energy_I(up, params).total - energy_I(um, params).total) / (2.0 * eps);
      worst = std::max(worst, std::abs(fd - exact) / std::max(std::abs(exact), 1e-12));
    }
    out.push_back(upper_bound("gradient_finite_difference", worst, 1e-4));
  }

  {
    const auto rows = compute_sweep(1.1, 2.9, 180);
    bool ordered = rows.size() == 181;
    for (const auto& r : rows) ordered &= r.omega0 < r.omega1 && r.omega1 < r.omega_bar;
    const bool identical = sweep_csv(rows) == sweep_csv(compute_sweep(1.1, 2.9, 180));
    out.push_back({"sweep_ordering_determinism", ordered && identical ? 0.0 : 1.0, 0.0, ordered && identical,
                   "181 rows, omega0 < omega1 < omega_bar, byte-identical"});
  }
}

void full_checks(std::vector<CheckResult>& out) {
  const double p = 2.0;
  {
    const CsParams params(p, omega0(p));
    const double k2 = *solve_eq_k(params).k2;
    const Field U = sample_soliton({p, k2}, Mesh1D::centered(60.0, 6000));
    const double j = energy_J(U, params).total;
    std::vector<double> corrections;
    for (double rho : {100.0, 200.0, 400.0}) {
      const double total = translated_profile_energy(U, rho, params).total;
      corrections.push_back(total - 2.0 * std::numbers::pi * rho * j);
    }
    const bool negative = std::all_of(corrections.begin(), corrections.end(), [](double c) { return c < 0.0; });
    const double drift = std::abs(corrections[2] - corrections[1]) / std::abs(corrections[1]);
    out.push_back({"translated_profile_rate", drift, 0.1, negative && drift < 0.1,
                   "correction I - 2 pi rho J negative and stable between rho = 200 and 400"});
  }

  {
    const CsParams params(p, 0.05);
    const double k2 = translated_soliton_k(params);
    std::vector<MinimizeResult> runs;
    for (double radius : {100.0, 200.0, 400.0}) {
      MinimizeConfig cfg;
      cfg.radius = radius;
      cfg.n = static_cast<std::size_t>(radius / 0.05);
      cfg.init = TranslatedSoliton{radius - 20.0 / std::sqrt(k2)};
      runs.push_back(minimize_on_ball(params, cfg));
    }
    const EscapeReport report = escape_diagnostics(runs, params);
    const double ratio = report.slope_ratio.value_or(0.0);
    out.push_back({"escape_slope", std::abs(ratio - 1.0), 0.25, std::abs(ratio - 1.0) <= 0.25,
                   "fitted dE/dR against 2 pi psi(k2) at omega = 0.05"});
    out.push_back(upper_bound("escape_energy_R400", runs.back().energy.total, -10.0));
  }

  {
    const CsParams params(p, 2.0 * omega1(p));
    double worst = std::numeric_limits<double>::infinity();
    for (InitialGuess init : {InitialGuess{ZeroPlusBump{}}, InitialGuess{TranslatedSoliton{300.0}}}) {
      MinimizeConfig cfg;
      cfg.radius = 400.0;
      cfg.n = 8000;
      cfg.init = init;
      worst = std::min(worst, minimize_on_ball(params, cfg).energy.total);
    }
    out.push_back(upper_bound("coercive_regime_energy", -worst, 1e-3, "min energy at omega = 2 omega1 >= -1e-3"));
  }

  {
    const CsParams params(p, 0.5);
    double worst = 0.0;
    for (InitialGuess init : {InitialGuess{ZeroPlusBump{}}, InitialGuess{TranslatedSoliton{75.0}}}) {
      MinimizeConfig cfg;
      cfg.radius = 100.0;
      cfg.n = 2000;
      cfg.init = init;
      const MinimizeResult res = minimize_on_ball(params, cfg);
      if (res.energy.total < -1e-8) worst = std::numeric_limits<double>::infinity();
      worst = std::max(worst, res.u.max_abs());
    }
    out.push_back(upper_bound("nonexistence_collapse", worst, 1e-3, "max|u| after minimization at omega = 0.5"));
  }
}

}  // namespace

std::vector<CheckResult> run(const Options& options) {
  std::vector<CheckResult> out;
  fast_checks(options, out);
  if (options.level == Level::full) full_checks(out);
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace csgauge::verification
