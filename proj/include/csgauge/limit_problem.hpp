#pragma once

#include <optional>
#include <utility>

#include "csgauge/params.hpp"
#include "csgauge/radial_core.hpp"

namespace csgauge {

// One-dimensional limit problem
//
//   J(u) = 1/2 int (u'^2 + omega u^2) + 1/24 (int u^2)^3 - 1/(p+1) int |u|^{p+1}
//
// whose nontrivial critical points are the solitons w_k, -w'' + k w = w^p,
// with k a root of  k = omega + m^2/4 k^{(5-p)/(p-1)},  m = int w_1^2.

struct SolitonParams {
  SolitonParams(double p, double k);
  double p;
  double k;
};

/// w_1(r) = (2/(p+1) cosh^2((p-1) r / 2))^{1/(1-p)}.
double soliton_w1(double p, double r);
/// w_1'(r) = -tanh((p-1) r / 2) w_1(r).
double soliton_w1_prime(double p, double r);

/// w_k(r) = k^{1/(p-1)} w_1(sqrt(k) r).
double soliton_wk(const SolitonParams& sp, double r);
double soliton_wk_prime(const SolitonParams& sp, double r);

/// Samples w_k on a line mesh.
Field sample_soliton(const SolitonParams& sp, const Mesh1D& mesh);

/// Half width 40/sqrt(k): w_k^2 has decayed below double precision there.
double default_soliton_half_width(double k);

/// m(p) = int w_1^2 dr by trapezoid quadrature on [-80/(p-1), 80/(p-1)] with
/// 2e5 intervals. Results are memoized per p.
double soliton_mass(double p);

/// max over nodes of |-1/2 w'^2 + k/2 w^2 - w^{p+1}/(p+1)| for the closed-form
/// soliton and its analytic derivative.
double hamiltonian_residual(const SolitonParams& sp, const Mesh1D& mesh);

/// (int |w_1'|^2, int w_1^{p+1}) by quadrature. In closed form these are
/// (p-1)/(p+3) m and 2(p+1)/(p+3) m.
std::pair<double, double> soliton_relations(double p);

/// Breakdown of J with the cubic mass term in the `nonlocal` slot.
EnergyBreakdown energy_J(const Field& u, const CsParams& params);

/// -u'' + omega u + 1/4 (int u^2)^2 u - |u|^{p-1} u on interior nodes; ends are 0.
Field limit_el_residual(const Field& u, const CsParams& params);

/// psi(k) = J(w_k) in closed form, evaluated in log space.
double psi_curve(double k, const CsParams& params);

/// g(k) = omega + m^2/4 k^{(5-p)/(p-1)} - k; zero exactly at the soliton frequencies.
double eq_k_residual(double k, const CsParams& params);

/// Degenerate root k0 = ((5-p) m^2 / (4 (p-1)))^{-(p-1)/(2(3-p))}.
double degenerate_root(double p);

struct RootReport {
  int count = 0;
  std::optional<double> k1;
  std::optional<double> k2;
};

/// Roots of k = omega + m^2/4 k^{(5-p)/(p-1)}, classified against omega1(p).
/// For omega = 0 only the upper root exists; it is reported as k2 with count 1.
RootReport solve_eq_k(const CsParams& params);

double omega1(double p);
double omega0(double p);

struct Thresholds {
  double p = 0.0;
  double m = 0.0;
  double omega0 = 0.0;
  double omega1 = 0.0;
  double omega_bar = 0.0;
};

/// Bundles m, omega0, omega1 and the nonexistence threshold. Throws
/// std::logic_error if omega0 < omega1 < omega_bar fails.
Thresholds thresholds(double p);

}  // namespace csgauge
