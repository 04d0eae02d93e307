#include "csgauge/minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "csgauge/cs_energy.hpp"
#include "csgauge/limit_problem.hpp"

namespace csgauge {
namespace {

constexpr double kArmijo = 1e-4;
constexpr double kMaxSpacing = 0.05;
constexpr double kMinStep = 1e-30;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Symmetric tridiagonal operator K + sigma M on the free nodes 0..n-1.
struct Preconditioner {
  std::vector<double> diag;
  std::vector<double> off;  // off[i] couples i and i + 1

  Preconditioner(const Mesh1D& mesh, double sigma) {
    const std::size_t n = mesh.intervals();
    const double h = mesh.spacing();
    const auto mass = radial_lumped_mass(mesh);
    diag.assign(n, 0.0);
    off.assign(n > 0 ? n - 1 : 0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double stiff = kTwoPi * (mesh.node(i) + 0.5 * h) / h;  // cell [i, i+1]
      diag[i] += stiff + sigma * mass[i];
      if (i + 1 < n) {
        diag[i + 1] += stiff;
        off[i] = -stiff;
      }
    }
  }

  // Thomas algorithm; rhs has n entries.
  std::vector<double> solve(std::span<const double> rhs) const {
    const std::size_t n = diag.size();
    std::vector<double> c(n, 0.0), x(rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(n));
    double denom = diag[0];
    if (n > 1) c[0] = off[0] / denom;
    x[0] /= denom;
    for (std::size_t i = 1; i < n; ++i) {
      denom = diag[i] - off[i - 1] * c[i - 1];
      if (i + 1 < n) c[i] = off[i] / denom;
      x[i] = (x[i] - off[i - 1] * x[i - 1]) / denom;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
    return x;
  }
};

double gradient_norm(std::span<const double> grad, std::span<const double> mass) {
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < grad.size(); ++i) worst = std::max(worst, std::abs(grad[i]) / mass[i]);
  return worst;
}

double interpolate(const Field& f, double x) {
  const Mesh1D& mesh = f.mesh();
  if (x < mesh.a() || x > mesh.b()) return 0.0;
  const double s = (x - mesh.a()) / mesh.spacing();
  const std::size_t i = std::min(static_cast<std::size_t>(s), mesh.intervals() - 1);
  const double t = s - static_cast<double>(i);
  return (1.0 - t) * f[i] + t * f[i + 1];
}

}  // namespace

void MinimizeConfig::validate() const {
  if (!(radius > 0.0) || n == 0 || max_iters == 0 || !(grad_tol > 0.0) || !(step_init > 0.0)) {
    throw std::domain_error("minimize: radius, n, max_iters, grad_tol and step_init must be positive");
  }
  if (radius / static_cast<double>(n) > kMaxSpacing) {
    throw std::domain_error("minimize: grid spacing " + std::to_string(radius / static_cast<double>(n)) +
                            " exceeds 0.05; increase n");
  }
  if (const auto* custom = std::get_if<Field>(&init)) {
    if (!(custom->mesh() == Mesh1D(0.0, radius, n))) {
      throw std::invalid_argument("minimize: custom initial field must live on the ball mesh");
    }
  }
}

double translated_soliton_k(const CsParams& params) {
  const RootReport roots = solve_eq_k(params);
  if (roots.k2) return *roots.k2;
  if (roots.k1) return *roots.k1;
  return params.omega() > 0.0 ? params.omega() : 1.0;
}

Field initial_iterate(const CsParams& params, const MinimizeConfig& config) {
  const Mesh1D mesh(0.0, config.radius, config.n);
  Field u = std::visit(
      [&](const auto& init) -> Field {
        using T = std::decay_t<decltype(init)>;
        if constexpr (std::is_same_v<T, ZeroPlusBump>) {
          return Field::sample(mesh, [](double r) { return 0.1 * std::exp(-r * r); });
        } else if constexpr (std::is_same_v<T, TranslatedSoliton>) {
          const SolitonParams sp(params.p(), translated_soliton_k(params));
          return Field::sample(mesh, [&](double r) { return soliton_wk(sp, r - init.rho); });
        } else {
          return init;
        }
      },
      config.init);
  u[config.n] = 0.0;
  return u;
}

std::pair<double, double> mass_and_centroid(const Field& u) {
  std::vector<double> sq(u.size()), moment(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    sq[i] = u[i] * u[i];
    moment[i] = sq[i] * u.mesh().node(i);
  }
  const double mass = integrate_radial(Field(u.mesh(), std::move(sq)));
  const double first = integrate_radial(Field(u.mesh(), std::move(moment)));
  return {mass, mass > 0.0 ? first / mass : 0.0};
}

MinimizeResult minimize_on_ball(const CsParams& params, const MinimizeConfig& config) {
  config.validate();
  Field u = initial_iterate(params, config);
  const Mesh1D& mesh = u.mesh();
  const std::size_t n = config.n;
  const auto mass = radial_lumped_mass(mesh);
  // Shift of order one keeps the metric close to the Hessian at u = 0 and at
  // soliton rings alike.
  const Preconditioner precond(mesh, params.omega() + 0.25);

  MinimizeResult result{.u = u, .energy = energy_I(u, params)};
  double energy = result.energy.total;
  if (!std::isfinite(energy)) throw DivergenceError("minimize: initial energy is not finite", {energy});
  result.initial_energy = energy;
  result.energy_trace.push_back(energy);

  std::vector<double> grad = energy_I_gradient(u, params);
  double step = config.step_init;
  std::vector<double> trial(u.size());
  std::size_t it = 0;
  for (; it < config.max_iters; ++it) {
    result.grad_norm = gradient_norm(grad, mass);
    if (result.grad_norm <= config.grad_tol) {
      result.converged = true;
      break;
    }
    std::vector<double> dir = precond.solve(std::span<const double>(grad).first(n));
    double slope = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      dir[i] = -dir[i];
      slope += grad[i] * dir[i];
    }
    if (!(slope < 0.0)) break;

    step = std::min(config.step_init, 2.0 * step);
    bool accepted = false;
    bool last_finite = true;
    EnergyBreakdown trial_energy;
    while (step >= kMinStep) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = u[i] + step * dir[i];
      trial[n] = 0.0;
      bool finite = std::all_of(trial.begin(), trial.end(), [](double v) { return std::isfinite(v); });
      if (finite) {
        trial_energy = energy_I(Field(mesh, trial), params);
        finite = std::isfinite(trial_energy.total);
      }
      last_finite = finite;
      if (finite && trial_energy.total <= energy + kArmijo * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (!last_finite) throw DivergenceError("minimize: energy became non-finite", result.energy_trace);
      break;  // no further decrease representable
    }
    for (std::size_t i = 0; i <= n; ++i) u[i] = trial[i];
    energy = trial_energy.total;
    result.energy = trial_energy;
    result.energy_trace.push_back(energy);
    grad = energy_I_gradient(u, params);
  }
  if (!result.converged) result.grad_norm = gradient_norm(grad, mass);
  result.converged = result.grad_norm <= config.grad_tol;
  result.iters = it;
  result.u = u;
  std::tie(result.l2_mass, result.centroid_xi) = mass_and_centroid(u);
  return result;
}

EnergyBreakdown translated_profile_energy(const Field& profile, double rho, const CsParams& params) {
  const Mesh1D& line = profile.mesh();
  const double at_origin = -rho < line.a() ? std::abs(profile[0]) : std::abs(interpolate(profile, -rho));
  if (!(rho > 0.0) || at_origin > 1e-12) {
    throw std::domain_error("translated_profile_energy: profile does not vanish at r = 0 (|U(-rho)| = " +
                            std::to_string(at_origin) + ")");
  }
  const double outer = rho + line.b();
  const auto n = static_cast<std::size_t>(std::ceil(outer / line.spacing() - 1e-9));
  const Mesh1D radial(0.0, outer, n);
  const Field u = Field::sample(radial, [&](double r) { return interpolate(profile, r - rho); });
  return energy_I(u, params);
}

EscapeReport escape_diagnostics(std::span<const MinimizeResult> results, const CsParams& params) {
  if (results.size() < 3) throw std::domain_error("escape_diagnostics: need at least three radii");
  EscapeReport report;
  for (const auto& res : results) {
    EscapeRow row;
    row.radius = res.u.mesh().b();
    row.energy = res.energy.total;
    row.l2_mass = res.l2_mass;
    row.centroid_xi = res.centroid_xi;
    row.centroid_over_mass = res.l2_mass > 0.0 ? res.centroid_xi / res.l2_mass : 0.0;
    report.rows.push_back(row);
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const auto& a, const auto& b) { return a.radius < b.radius; });

  const double count = static_cast<double>(report.rows.size());
  double mean_r = 0.0, mean_e = 0.0;
  for (const auto& row : report.rows) {
    mean_r += row.radius / count;
    mean_e += row.energy / count;
  }
  double sxy = 0.0, sxx = 0.0;
  for (const auto& row : report.rows) {
    sxy += (row.radius - mean_r) * (row.energy - mean_e);
    sxx += (row.radius - mean_r) * (row.radius - mean_r);
  }
  report.fitted_slope = sxx > 0.0 ? sxy / sxx : 0.0;

  report.l2_mass_increasing = true;
  report.centroid_increasing = true;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    report.l2_mass_increasing &= report.rows[i].l2_mass > report.rows[i - 1].l2_mass;
    report.centroid_increasing &= report.rows[i].centroid_xi > report.rows[i - 1].centroid_xi;
  }

  const RootReport roots = solve_eq_k(params);
  if (roots.count == 2) {
    report.reference_slope = kTwoPi * psi_curve(*roots.k2, params);
    report.slope_ratio = report.fitted_slope / *report.reference_slope;
  }
  return report;
}

}  // namespace csgauge
