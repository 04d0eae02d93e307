#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "csgauge/cs_energy.hpp"
#include "csgauge/limit_problem.hpp"
#include "csgauge/minimizer.hpp"

using namespace csgauge;
using std::numbers::pi;

namespace {

MinimizeConfig ball(double radius, InitialGuess init) {
  MinimizeConfig c;
  c.radius = radius;
  c.n = static_cast<std::size_t>(std::llround(radius / 0.05));
  c.init = std::move(init);
  return c;
}

void expect_descent(const MinimizeResult& r) {
  ASSERT_FALSE(r.energy_trace.empty());
  EXPECT_EQ(r.energy_trace.front(), r.initial_energy);
  for (std::size_t i = 1; i < r.energy_trace.size(); ++i) EXPECT_LE(r.energy_trace[i], r.energy_trace[i - 1]);
  EXPECT_EQ(r.energy_trace.back(), r.energy.total);
  EXPECT_LE(r.energy.total, r.initial_energy);
  EXPECT_EQ(r.u[r.u.size() - 1], 0.0);
}

Field soliton_line(double p, double k, std::size_t n) {
  return sample_soliton(SolitonParams(p, k), Mesh1D::centered(default_soliton_half_width(k), n));
}

}  // namespace

TEST(MinimizeConfig, Validation) {
  MinimizeConfig c;
  EXPECT_NO_THROW(c.validate());
  c.n = 1000;  // spacing 0.1
  EXPECT_THROW(c.validate(), std::domain_error);
  c = {};
  c.grad_tol = 0.0;
  EXPECT_THROW(c.validate(), std::domain_error);
  c = {};
  c.radius = -1.0;
  EXPECT_THROW(c.validate(), std::domain_error);
  c = {};
  c.step_init = 0.0;
  EXPECT_THROW(c.validate(), std::domain_error);
  c = {};
  c.init = Field(Mesh1D(0.0, 50.0, 2000));
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(InitialIterate, BumpAndRing) {
  const CsParams params(2.0, 0.05);
  const Field bump = initial_iterate(params, ball(20.0, ZeroPlusBump{}));
  EXPECT_DOUBLE_EQ(bump[0], 0.1);
  EXPECT_EQ(bump[bump.size() - 1], 0.0);
  EXPECT_NEAR(bump[20], 0.1 * std::exp(-1.0), 1e-15);

  const Field ring = initial_iterate(params, ball(50.0, TranslatedSoliton{30.0}));
  const double k2 = *solve_eq_k(params).k2;
  EXPECT_EQ(translated_soliton_k(params), k2);
  EXPECT_NEAR(ring[600], soliton_wk(SolitonParams(2.0, k2), 0.0), 1e-12);
  EXPECT_EQ(ring[ring.size() - 1], 0.0);
}

TEST(TranslatedSolitonK, Fallbacks) {
  EXPECT_EQ(translated_soliton_k(CsParams(2.0, 0.5)), 0.5);
  EXPECT_NEAR(translated_soliton_k(CsParams(2.0, 0.0)), 1.0 / 3.0, 1e-10);
  EXPECT_NEAR(translated_soliton_k(CsParams(2.0, omega1(2.0))), degenerate_root(2.0), 1e-10);
}

TEST(MassAndCentroid, UnitDisk) {
  const auto [mass, centroid] = mass_and_centroid(Field::sample(Mesh1D(0.0, 1.0, 1000), [](double) { return 1.0; }));
  EXPECT_NEAR(mass, pi, 1e-12);
  EXPECT_NEAR(centroid, 2.0 / 3.0, 1e-6);
  const auto [zm, zc] = mass_and_centroid(Field(Mesh1D(0.0, 1.0, 10)));
  EXPECT_EQ(zm, 0.0);
  EXPECT_EQ(zc, 0.0);
}

TEST(Minimize, NonexistenceRegimeCollapsesToZero) {
  const CsParams params(2.0, 0.5);
  for (const InitialGuess& init : {InitialGuess(ZeroPlusBump{}), InitialGuess(TranslatedSoliton{80.0})}) {
    const MinimizeResult r = minimize_on_ball(params, ball(100.0, init));
    expect_descent(r);
    EXPECT_GE(r.energy.total, -1e-8);
    EXPECT_LE(r.u.max_abs(), 1e-3);
  }
}

TEST(Minimize, ConvergedResultHasSmallResidual) {
  const CsParams params(2.0, 0.05);
  MinimizeConfig c = ball(60.0, TranslatedSoliton{60.0 - 20.0 / std::sqrt(translated_soliton_k(params))});
  const MinimizeResult r = minimize_on_ball(params, c);
  expect_descent(r);
  ASSERT_TRUE(r.converged);
  EXPECT_LE(r.grad_norm, c.grad_tol);
  EXPECT_LE(el_residual(r.u, params).max_abs(), 10.0 * c.grad_tol);
}

TEST(Minimize, NegativeEnergyAtOmega0) {
  const CsParams params(2.0, omega0(2.0));
  const MinimizeResult r = minimize_on_ball(params, ball(400.0, TranslatedSoliton{300.0}));
  expect_descent(r);
  EXPECT_LE(r.energy.total, -1e-3);
}

TEST(Minimize, BoundedByTranslatedProfileEnergy) {
  // Grid-aligned: the line mesh spacing equals the ball spacing and rho + L = R.
  const CsParams params(2.0, 0.05);
  const double k2 = translated_soliton_k(params);
  const Mesh1D line = Mesh1D::centered(55.0, 2200);
  const Field U = sample_soliton(SolitonParams(2.0, k2), line);
  const double rho = 120.0 - line.b();
  const MinimizeResult r = minimize_on_ball(params, ball(120.0, TranslatedSoliton{rho}));
  expect_descent(r);
  EXPECT_LE(r.energy.total, translated_profile_energy(U, rho, params).total + 1e-6);
}

TEST(Minimize, CustomInitialField) {
  const CsParams params(2.0, 0.5);
  MinimizeConfig c = ball(10.0, ZeroPlusBump{});
  c.init = Field::sample(Mesh1D(0.0, 10.0, 200), [](double r) { return 0.2 * std::exp(-r); });
  const MinimizeResult r = minimize_on_ball(params, c);
  expect_descent(r);
  EXPECT_NEAR(r.initial_energy, energy_I(initial_iterate(params, c), params).total, 1e-15);
}

TEST(Minimize, NonFiniteEnergyDiverges) {
  MinimizeConfig c = ball(10.0, ZeroPlusBump{});
  c.init = Field::sample(Mesh1D(0.0, 10.0, 200), [](double) { return 1e120; });
  try {
    minimize_on_ball(CsParams(2.0, 0.1), c);
    FAIL() << "expected DivergenceError";
  } catch (const DivergenceError& e) {
    EXPECT_FALSE(e.energy_trace().empty());
  }
}

TEST(Minimize, StopsAtMaxIters) {
  MinimizeConfig c = ball(100.0, TranslatedSoliton{80.0});
  c.max_iters = 5;
  const MinimizeResult r = minimize_on_ball(CsParams(2.0, 0.05), c);
  EXPECT_EQ(r.iters, 5u);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.energy_trace.size(), 6u);
}

TEST(TranslatedProfile, ZeroProfileAndPrecondition) {
  const CsParams params(2.0, 0.1);
  EXPECT_EQ(translated_profile_energy(Field(Mesh1D::centered(10.0, 200)), 50.0, params).total, 0.0);
  const Field U = soliton_line(2.0, 1.0, 2000);
  EXPECT_THROW(translated_profile_energy(U, 5.0, params), std::domain_error);
  EXPECT_THROW(translated_profile_energy(U, -5.0, params), std::domain_error);
  EXPECT_NO_THROW(translated_profile_energy(U, 60.0, params));
}

TEST(TranslatedProfile, EnergyPerLengthApproachesLimitEnergy) {
  const CsParams params(2.0, omega0(2.0));
  const double k2 = *solve_eq_k(params).k2;
  const Field U = soliton_line(2.0, k2, 8000);
  const double J = energy_J(U, params).total;
  EXPECT_NEAR(J, 0.0, 1e-6);
  const double at200 = translated_profile_energy(U, 200.0, params).total;
  EXPECT_NEAR(at200 / (2.0 * pi * 200.0), J, 0.02);

  std::vector<double> scaled, correction;
  for (double rho : {100.0, 200.0, 400.0}) {
    const double total = translated_profile_energy(U, rho, params).total;
    scaled.push_back(std::abs(total / (2.0 * pi * rho)));
    correction.push_back(total - 2.0 * pi * rho * J);
    EXPECT_LT(correction.back(), 0.0);
  }
  EXPECT_NEAR(scaled[0] / scaled[1], 2.0, 0.2);
  EXPECT_NEAR(scaled[1] / scaled[2], 2.0, 0.2);
  EXPECT_LT(std::abs(correction[2] - correction[1]), 0.1 * std::abs(correction[2]));
}

TEST(EscapeDiagnostics, NeedsThreeRuns) {
  std::vector<MinimizeResult> two(2, MinimizeResult{Field(Mesh1D(0.0, 1.0, 10))});
  EXPECT_THROW(escape_diagnostics(two, CsParams(2.0, 0.05)), std::domain_error);
}

TEST(EscapeDiagnostics, FitsSlopeOnSyntheticRows) {
  const CsParams params(2.0, 0.05);
  std::vector<MinimizeResult> runs;
  for (double R : {400.0, 100.0, 200.0}) {
    MinimizeResult r{Field(Mesh1D(0.0, R, 10))};
    r.energy.total = 3.0 - 0.15 * R;
    r.l2_mass = R;
    r.centroid_xi = 0.9 * R;
    runs.push_back(r);
  }
  const EscapeReport rep = escape_diagnostics(runs, params);
  ASSERT_EQ(rep.rows.size(), 3u);
  EXPECT_EQ(rep.rows.front().radius, 100.0);
  EXPECT_NEAR(rep.fitted_slope, -0.15, 1e-12);
  EXPECT_TRUE(rep.l2_mass_increasing);
  EXPECT_TRUE(rep.centroid_increasing);
  EXPECT_NEAR(rep.rows[1].centroid_over_mass, 0.9, 1e-15);
  ASSERT_TRUE(rep.reference_slope.has_value());
  const double k2 = *solve_eq_k(params).k2;
  EXPECT_NEAR(*rep.reference_slope, 2.0 * pi * psi_curve(k2, params), 1e-15);
  EXPECT_NEAR(*rep.slope_ratio, -0.15 / *rep.reference_slope, 1e-12);

  const EscapeReport none = escape_diagnostics(runs, CsParams(2.0, 0.3));
  EXPECT_FALSE(none.reference_slope.has_value());
  EXPECT_FALSE(none.slope_ratio.has_value());
}

TEST(EscapeDiagnostics, SmallBallsShowDrift) {
  const CsParams params(2.0, 0.05);
  const double k2 = translated_soliton_k(params);
  std::vector<MinimizeResult> runs;
  for (double R : {50.0, 100.0, 150.0}) {
    runs.push_back(minimize_on_ball(params, ball(R, TranslatedSoliton{R - 20.0 / std::sqrt(k2)})));
    expect_descent(runs.back());
  }
  const EscapeReport rep = escape_diagnostics(runs, params);
  EXPECT_LT(rep.fitted_slope, 0.0);
  EXPECT_TRUE(rep.l2_mass_increasing);
  EXPECT_TRUE(rep.centroid_increasing);
  ASSERT_TRUE(rep.slope_ratio.has_value());
  EXPECT_GT(*rep.slope_ratio, 0.75);
  EXPECT_LT(*rep.slope_ratio, 1.25);
}

TEST(EscapeDiagnostics, CoerciveRegimeStaysBounded) {
  const CsParams params(2.0, 2.0 * omega1(2.0));
  for (double R : {50.0, 100.0, 150.0}) {
    for (const InitialGuess& init : {InitialGuess(ZeroPlusBump{}), InitialGuess(TranslatedSoliton{R - 20.0})}) {
      const MinimizeResult r = minimize_on_ball(params, ball(R, init));
      expect_descent(r);
      EXPECT_LE(std::abs(r.energy.total), 1.0);
      EXPECT_GE(r.energy.total, -1e-3);
      EXPECT_LE(r.l2_mass, 1.0);
    }
  }
}
