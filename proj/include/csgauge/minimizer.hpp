#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "csgauge/params.hpp"
#include "csgauge/radial_core.hpp"

namespace csgauge {

/// Small centered bump 0.1 exp(-r^2).
struct ZeroPlusBump {};

/// Soliton ring w_k(r - rho); see translated_soliton_k for the choice of k.
struct TranslatedSoliton {
  double rho = 0.0;
};

using InitialGuess = std::variant<ZeroPlusBump, TranslatedSoliton, Field>;

struct MinimizeConfig {
  double radius = 100.0;
  std::size_t n = 2000;
  std::size_t max_iters = 20000;
  double grad_tol = 1e-6;  // on the max-norm of the discrete L^2 gradient
  double step_init = 1.0;
  InitialGuess init = ZeroPlusBump{};

  /// Throws std::domain_error on nonpositive values or spacing > 0.05.
  void validate() const;
};

struct MinimizeResult {
  Field u;
  EnergyBreakdown energy;
  std::size_t iters = 0;
  double grad_norm = 0.0;
  double centroid_xi = 0.0;  // int u^2 r dx / int u^2 dx
  double l2_mass = 0.0;      // int u^2 dx
  bool converged = false;
  double initial_energy = 0.0;
  std::vector<double> energy_trace{};  // total energy of every accepted iterate
};

class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, std::vector<double> trace)
      : std::runtime_error(what), energy_trace_(std::move(trace)) {}
  const std::vector<double>& energy_trace() const { return energy_trace_; }

 private:
  std::vector<double> energy_trace_;
};

/// k used for translated-soliton initial guesses: the upper root k2 when
/// omega < omega1, otherwise the local NLS frequency k = omega (k = 1 at omega = 0).
double translated_soliton_k(const CsParams& params);

/// Initial iterate on the ball mesh, with u(R) = 0.
Field initial_iterate(const CsParams& params, const MinimizeConfig& config);

/// Minimizes the discrete energy_I over radial profiles on [0, R] with u(R) = 0.
///
/// Descent directions are gradients in the discrete H^1-type metric
/// K + sigma M (K: kinetic stiffness, M: lumped radial mass), so the step
/// length is O(1) independently of the grid. Each step is accepted by Armijo
/// backtracking (constant 1e-4, halving), so the energy never increases.
/// Throws DivergenceError when the energy stops being finite.
MinimizeResult minimize_on_ball(const CsParams& params, const MinimizeConfig& config);

/// Mass and centroid of a radial profile: {int u^2 dx, int u^2 r dx / int u^2 dx}.
std::pair<double, double> mass_and_centroid(const Field& u);

/// Embeds a line profile U as the radial field U(r - rho) on [0, rho + b] with
/// the spacing of U, and evaluates energy_I. Throws std::domain_error unless
/// |U(-rho)| <= 1e-12.
EnergyBreakdown translated_profile_energy(const Field& profile, double rho, const CsParams& params);

struct EscapeRow {
  double radius = 0.0;
  double energy = 0.0;
  double l2_mass = 0.0;
  double centroid_xi = 0.0;
  double centroid_over_mass = 0.0;
};

struct EscapeReport {
  std::vector<EscapeRow> rows;
  double fitted_slope = 0.0;                 // least-squares dE/dR
  std::optional<double> reference_slope;     // 2 pi psi(k2) when omega < omega1
  std::optional<double> slope_ratio;         // fitted / reference
  bool l2_mass_increasing = false;
  bool centroid_increasing = false;
};

/// Trend report over runs on increasing radii. Needs at least 3 runs.
EscapeReport escape_diagnostics(std::span<const MinimizeResult> results, const CsParams& params);

}  // namespace csgauge
