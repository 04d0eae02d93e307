#include "csgauge/cs_energy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "csgauge/scalar_solvers.hpp"

namespace csgauge {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_radial(const Field& u, const char* what) {
  if (u.mesh().a() != 0.0) throw std::domain_error(std::string(what) + ": radial mesh must start at r = 0");
}

// 1/2 int |u'|^2 dx on cells, dx = 2 pi r dr with r at the cell midpoint.
double radial_kinetic(const Field& u) {
  const Mesh1D& mesh = u.mesh();
  const double h = mesh.spacing();
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    const double du = u[i + 1] - u[i];
    sum += (mesh.node(i) + 0.5 * h) * du * du;
  }
  return 0.5 * kTwoPi * sum / h;
}

// (int_0^r s u^2 ds)^2 = (2h)^2, so the nonlocal integrand is u^2 (2h)^2 / r.
double radial_nonlocal(const Field& u, const Field& h) {
  const Mesh1D& mesh = u.mesh();
  const auto w = trapezoid_weights(mesh);
  double sum = 0.0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const double g = 2.0 * h[i];
    sum += w[i] * u[i] * u[i] * g * g / mesh.node(i);
  }
  return kTwoPi * sum / 8.0;
}

}  // namespace

Field gauge_h(const Field& u) {
  require_radial(u, "gauge_h");
  std::vector<double> sq(u.size());
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = u[i] * u[i];
  Field g = prefix_integral(Field(u.mesh(), std::move(sq)), PrefixWeight::times_r);
  for (double& v : g.values()) v *= 0.5;
  return g;
}

Field a0_tail(const Field& u, const Field& h) {
  require_same_mesh(u, h);
  std::vector<double> integrand(u.size());
  for (std::size_t i = 0; i < integrand.size(); ++i) integrand[i] = h[i] * u[i] * u[i];
  return suffix_integral(Field(u.mesh(), std::move(integrand)), SuffixWeight::inverse_r);
}

EnergyBreakdown energy_I(const Field& u, const CsParams& params) {
  require_radial(u, "energy_I");
  const Mesh1D& mesh = u.mesh();
  const double p = params.p();
  const auto w = trapezoid_weights(mesh);
  // Plain sums so that overflow shows up as a non-finite total.
  double l2 = 0.0, lp = 0.0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const double wr = w[i] * mesh.node(i);
    l2 += wr * u[i] * u[i];
    lp += wr * std::pow(std::abs(u[i]), p + 1.0);
  }
  l2 *= kTwoPi;
  lp *= kTwoPi;
  if (!std::isfinite(l2)) return EnergyBreakdown::from_terms(radial_kinetic(u), NAN, NAN, -lp / (p + 1.0));
  return EnergyBreakdown::from_terms(radial_kinetic(u), 0.5 * params.omega() * l2, radial_nonlocal(u, gauge_h(u)),
                                     -lp / (p + 1.0));
}

std::vector<double> radial_lumped_mass(const Mesh1D& mesh) {
  auto w = trapezoid_weights(mesh);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] *= kTwoPi * mesh.node(i);
  return w;
}

std::vector<double> energy_I_gradient(const Field& u, const CsParams& params) {
  require_radial(u, "energy_I_gradient");
  const Mesh1D& mesh = u.mesh();
  const std::size_t n = mesh.intervals();
  const double h = mesh.spacing();
  const double p = params.p();
  const auto w = trapezoid_weights(mesh);
  std::vector<double> grad(u.size(), 0.0);

  // Kinetic: 2 pi sum_cells r_mid (u_{i+1} - u_i)^2 / (2h).
  for (std::size_t i = 0; i < n; ++i) {
    const double flux = kTwoPi * (mesh.node(i) + 0.5 * h) * (u[i + 1] - u[i]) / h;
    grad[i] -= flux;
    grad[i + 1] += flux;
  }

  // Local terms.
  for (std::size_t i = 1; i <= n; ++i) {
    const double m = kTwoPi * w[i] * mesh.node(i);
    const double a = std::abs(u[i]);
    grad[i] += m * (params.omega() * u[i] - std::pow(a, p - 1.0) * u[i]);
  }

  // Nonlocal: N = (pi/4) sum_i w_i u_i^2 G_i^2 / r_i with G_i = trapezoid
  // prefix of s u^2. dG_i/du_k = c_ik r_k 2 u_k, c_ik = h/2 at k = i, h below.
  const Field hg = gauge_h(u);
  std::vector<double> q(u.size(), 0.0);
  for (std::size_t i = 1; i <= n; ++i) q[i] = w[i] * u[i] * u[i] * (2.0 * hg[i]) / mesh.node(i);
  double tail = 0.0;  // sum_{i > k} q_i
  for (std::size_t k = n; k >= 1; --k) {
    const double r = mesh.node(k);
    const double g = 2.0 * hg[k];
    const double s = 0.5 * h * q[k] + h * tail;
    grad[k] += 0.25 * std::numbers::pi * (2.0 * w[k] * u[k] * g * g / r + 4.0 * r * u[k] * s);
    tail += q[k];
  }
  return grad;
}

Field el_residual(const Field& u, const CsParams& params) {
  require_radial(u, "el_residual");
  const Mesh1D& mesh = u.mesh();
  const Field d1 = derivative(u);
  const Field d2 = second_derivative(u);
  const Field hg = gauge_h(u);
  const Field tail = a0_tail(u, hg);
  const double p = params.p();
  std::vector<double> res(u.size(), 0.0);
  for (std::size_t i = 1; i < mesh.intervals(); ++i) {
    const double r = mesh.node(i);
    const double potential = params.omega() + hg[i] * hg[i] / (r * r) + tail[i];
    res[i] = -d2[i] - d1[i] / r + potential * u[i] - std::pow(std::abs(u[i]), p - 1.0) * u[i];
  }
  return Field(mesh, std::move(res));
}

double cs_inequality_gap(const Field& u) {
  require_radial(u, "cs_inequality_gap");
  const double grad_sq = 2.0 * radial_kinetic(u);
  const double core = 8.0 * radial_nonlocal(u, gauge_h(u));
  std::vector<double> q(u.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = std::pow(u[i], 4);
  const double l4 = integrate_radial(Field(u.mesh(), std::move(q)));
  return 2.0 * std::sqrt(grad_sq) * std::sqrt(core) - l4;
}

PointwiseProfile pointwise_profile(const CsParams& params) {
  const double p = params.p();
  const double omega = params.omega();
  auto f = [&](double t) { return 0.25 * omega * t * t + 0.125 * std::pow(t, 4) - std::pow(t, p + 1.0) / (p + 1.0); };
  // f(t)/t^2 decreases up to t_m and increases after, so the negative set is
  // an interval around t_m.
  auto ratio = [&](double t) { return 0.25 * omega + 0.125 * t * t - std::pow(t, p - 1.0) / (p + 1.0); };
  const double t_m = std::pow(4.0 * (p - 1.0) / (p + 1.0), 1.0 / (3.0 - p));
  PointwiseProfile out;
  if (!(ratio(t_m) < 0.0)) return out;
  out.exists_negative = true;
  out.alpha = omega == 0.0 ? 0.0 : scalar::bisect(ratio, 0.0, t_m, 1e-13);
  double hi = 2.0 * t_m;
  while (ratio(hi) < 0.0) hi *= 2.0;
  out.beta = scalar::bisect(ratio, t_m, hi, 1e-13);
  // f'(t) = t (omega/2 + t^2/2 - t^{p-1}); on (alpha, beta) it changes sign once.
  auto slope = [&](double t) { return 0.5 * omega + 0.5 * t * t - std::pow(t, p - 1.0); };
  const double lo = std::max(out.alpha, 1e-300);
  const double t_min = slope(lo) < 0.0 && slope(out.beta) > 0.0 ? scalar::bisect(slope, lo, out.beta, 1e-13)
                                                                 : scalar::golden_min(f, out.alpha, out.beta, 1e-12);
  out.c0 = -f(t_min);
  return out;
}

double nonexistence_threshold(double p) {
  require_exponent_in_band(p);
  const double t_star = std::pow(2.0 * (p - 1.0) / 3.0, 1.0 / (3.0 - p));
  return std::pow(t_star, p - 1.0) - 0.75 * t_star * t_star;
}

}  // namespace csgauge
