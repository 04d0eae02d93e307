#pragma once

#include <vector>

#include "csgauge/params.hpp"
#include "csgauge/radial_core.hpp"

namespace csgauge {

// Radial stationary Chern-Simons-Schroedinger energy on a disk [0, R]:
//
//   I(u) = 1/2 int (|u'|^2 + omega u^2) + 1/8 int u^2/|x|^2 (int_0^|x| s u^2 ds)^2
//          - 1/(p+1) int |u|^{p+1},
//
// all integrals over R^2 with dx = 2 pi r dr. The kinetic term uses cell
// differences (u_{i+1} - u_i)/h at cell midpoints; every other term uses the
// trapezoid rule. Integrands with 1/r factors vanish at r = 0 because h = O(r^2).

/// h(r) = 1/2 int_0^r s u^2(s) ds.
Field gauge_h(const Field& u);

/// int_r^R (h(s)/s) u^2(s) ds, the nonconstant part of A_0.
Field a0_tail(const Field& u, const Field& h);

EnergyBreakdown energy_I(const Field& u, const CsParams& params);

/// Exact gradient of the discrete energy_I with respect to the nodal values.
std::vector<double> energy_I_gradient(const Field& u, const CsParams& params);

/// Lumped mass 2 pi r_i w_i; dividing the nodal gradient by it gives the
/// discrete L^2 gradient, which approximates el_residual.
std::vector<double> radial_lumped_mass(const Mesh1D& mesh);

/// -u'' - u'/r + (omega + h^2/r^2 + tail) u - |u|^{p-1} u on interior nodes.
/// The two end values are reported as 0.
Field el_residual(const Field& u, const CsParams& params);

/// 2 (int |grad u|^2)^{1/2} (int u^2/|x|^2 (int_0^|x| s u^2)^2)^{1/2} - int u^4.
/// Nonnegative for every radial u up to quadrature error.
double cs_inequality_gap(const Field& u);

/// Negative set (alpha, beta) and depth c0 = -min f of
/// f(t) = omega/4 t^2 + t^4/8 - t^{p+1}/(p+1), t > 0.
struct PointwiseProfile {
  double alpha = 0.0;
  double beta = 0.0;
  double c0 = 0.0;
  bool exists_negative = false;
};

/// When omega = 0 the negative set starts at alpha = 0.
PointwiseProfile pointwise_profile(const CsParams& params);

/// Smallest omega such that omega t^2 + 3/4 t^4 - t^{p+1} >= 0 for all t >= 0,
/// i.e. max_t (t^{p-1} - 3/4 t^2). Above it the only solution is u = 0.
double nonexistence_threshold(double p);

}  // namespace csgauge
