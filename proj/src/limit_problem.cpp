#include "csgauge/limit_problem.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "csgauge/cs_energy.hpp"
#include "csgauge/scalar_solvers.hpp"

namespace csgauge {
namespace {

constexpr double kEqualityTol = 1e-12;
constexpr std::size_t kMassIntervals = 200000;

// log cosh without overflow.
double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::log(2.0);
}

double log_w1(double p, double r) {
  return (std::log(2.0 / (p + 1.0)) + 2.0 * log_cosh(0.5 * (p - 1.0) * r)) / (1.0 - p);
}

Mesh1D mass_mesh(double p) { return Mesh1D::centered(80.0 / (p - 1.0), kMassIntervals); }

}  // namespace

SolitonParams::SolitonParams(double p_, double k_) : p(p_), k(k_) {
  require_exponent_in_band(p);
  if (!(k > 0.0) || !std::isfinite(k)) throw std::domain_error("soliton parameter k must be positive");
}

double soliton_w1(double p, double r) {
  require_exponent_in_band(p);
  return std::exp(log_w1(p, r));
}

double soliton_w1_prime(double p, double r) { return -std::tanh(0.5 * (p - 1.0) * r) * soliton_w1(p, r); }

double soliton_wk(const SolitonParams& sp, double r) {
  return std::pow(sp.k, 1.0 / (sp.p - 1.0)) * soliton_w1(sp.p, std::sqrt(sp.k) * r);
}

double soliton_wk_prime(const SolitonParams& sp, double r) {
  const double sk = std::sqrt(sp.k);
  return std::pow(sp.k, 1.0 / (sp.p - 1.0)) * sk * soliton_w1_prime(sp.p, sk * r);
}

Field sample_soliton(const SolitonParams& sp, const Mesh1D& mesh) {
  return Field::sample(mesh, [&](double r) { return soliton_wk(sp, r); });
}

double default_soliton_half_width(double k) { return 40.0 / std::sqrt(k); }

double soliton_mass(double p) {
  require_exponent_in_band(p);
  static std::mutex mutex;
  static std::map<double, double> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
  }
  const Field sq = Field::sample(mass_mesh(p), [p](double r) { return std::exp(2.0 * log_w1(p, r)); });
  const double m = integrate_line(sq);
  std::lock_guard lock(mutex);
  cache.emplace(p, m);
  return m;
}

double hamiltonian_residual(const SolitonParams& sp, const Mesh1D& mesh) {
  double worst = 0.0;
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const double r = mesh.node(i);
    const double w = soliton_wk(sp, r);
    const double dw = soliton_wk_prime(sp, r);
    const double ham = -0.5 * dw * dw + 0.5 * sp.k * w * w - std::pow(w, sp.p + 1.0) / (sp.p + 1.0);
    worst = std::max(worst, std::abs(ham));
  }
  return worst;
}

std::pair<double, double> soliton_relations(double p) {
  require_exponent_in_band(p);
  const Mesh1D mesh = mass_mesh(p);
  const Field grad_sq = Field::sample(mesh, [p](double r) {
    const double d = soliton_w1_prime(p, r);
    return d * d;
  });
  const Field power = Field::sample(mesh, [p](double r) { return std::exp((p + 1.0) * log_w1(p, r)); });
  return {integrate_line(grad_sq), integrate_line(power)};
}

EnergyBreakdown energy_J(const Field& u, const CsParams& params) {
  const Mesh1D& mesh = u.mesh();
  const double h = mesh.spacing();
  const double p = params.p();
  double grad_sq = 0.0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    const double du = u[i + 1] - u[i];
    grad_sq += du * du;
  }
  grad_sq /= h;
  std::vector<double> sq(u.size()), pw(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    sq[i] = u[i] * u[i];
    pw[i] = std::pow(std::abs(u[i]), p + 1.0);
  }
  const double l2 = integrate_line(Field(mesh, std::move(sq)));
  const double lp = integrate_line(Field(mesh, std::move(pw)));
  return EnergyBreakdown::from_terms(0.5 * grad_sq, 0.5 * params.omega() * l2, l2 * l2 * l2 / 24.0, -lp / (p + 1.0));
}

Field limit_el_residual(const Field& u, const CsParams& params) {
  const Mesh1D& mesh = u.mesh();
  const Field d2 = second_derivative(u);
  std::vector<double> sq(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) sq[i] = u[i] * u[i];
  const double l2 = integrate_line(Field(mesh, std::move(sq)));
  const double shift = params.omega() + 0.25 * l2 * l2;
  std::vector<double> res(u.size(), 0.0);
  for (std::size_t i = 1; i < mesh.intervals(); ++i) {
    res[i] = -d2[i] + shift * u[i] - std::pow(std::abs(u[i]), params.p() - 1.0) * u[i];
  }
  return Field(mesh, std::move(res));
}

double psi_curve(double k, const CsParams& params) {
  if (!(k > 0.0)) throw std::domain_error("psi_curve: k must be positive");
  const double p = params.p();
  const double m = soliton_mass(p);
  const double lk = std::log(k);
  const double e_mass = (5.0 - p) / (2.0 * (p - 1.0));
  const double e_local = (3.0 + p) / (2.0 * (p - 1.0));
  const double e_cubic = 3.0 * (5.0 - p) / (2.0 * (p - 1.0));
  return m * ((p - 5.0) / (2.0 * (3.0 + p)) * std::exp(e_local * lk) + 0.5 * params.omega() * std::exp(e_mass * lk) +
              m * m / 24.0 * std::exp(e_cubic * lk));
}

double eq_k_residual(double k, const CsParams& params) {
  const double p = params.p();
  const double m = soliton_mass(p);
  return params.omega() + 0.25 * m * m * std::pow(k, (5.0 - p) / (p - 1.0)) - k;
}

double degenerate_root(double p) {
  require_exponent_in_band(p);
  const double m = soliton_mass(p);
  const double a = (5.0 - p) * m * m / (4.0 * (p - 1.0));
  return std::pow(a, -(p - 1.0) / (2.0 * (3.0 - p)));
}

RootReport solve_eq_k(const CsParams& params) {
  const double w1 = omega1(params.p());
  RootReport report;
  const double gap = params.omega() - w1;
  if (gap > kEqualityTol) return report;
  const double k0 = degenerate_root(params.p());
  if (std::abs(gap) <= kEqualityTol) {
    report.count = 1;
    report.k1 = k0;
    return report;
  }
  auto g = [&](double k) { return eq_k_residual(k, params); };
  double hi = 2.0 * k0;
  while (g(hi) <= 0.0) hi *= 2.0;
  report.k2 = scalar::bisect(g, k0, hi, 0.0);
  if (params.omega() == 0.0) {
    report.count = 1;
    return report;
  }
  report.count = 2;
  report.k1 = scalar::bisect(g, std::min(1e-14, 0.5 * params.omega()), k0, 0.0);
  return report;
}

double omega1(double p) {
  require_exponent_in_band(p);
  const double m = soliton_mass(p);
  const double a = (5.0 - p) * m * m / (4.0 * (p - 1.0));
  return std::pow(a, -(p - 1.0) / (2.0 * (3.0 - p))) - 0.25 * m * m * std::pow(a, -(5.0 - p) / (2.0 * (3.0 - p)));
}

double omega0(double p) {
  require_exponent_in_band(p);
  const double m = soliton_mass(p);
  const double e = (p - 1.0) / (2.0 * (3.0 - p));
  return (3.0 - p) / (3.0 + p) * std::pow(3.0, e) * std::pow(2.0, 2.0 / (3.0 - p)) *
         std::pow(m * m * (3.0 + p) / (p - 1.0), -e);
}

Thresholds thresholds(double p) {
  Thresholds t{p, soliton_mass(p), omega0(p), omega1(p), nonexistence_threshold(p)};
  if (!(t.omega0 < t.omega1 && t.omega1 < t.omega_bar)) {
    throw std::logic_error("threshold ordering omega0 < omega1 < omega_bar violated at p = " + std::to_string(p));
  }
  return t;
}

}  // namespace csgauge
