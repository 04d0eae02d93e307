#pragma once

namespace csgauge {

// Closed forms carry exponents like 2/(3-p) and (5-p)/(p-1); the band keeps
// them finite in double precision.
inline constexpr double kExponentMin = 1.001;
inline constexpr double kExponentMax = 2.999;

bool exponent_in_band(double p);

/// Throws std::domain_error when p is outside (kExponentMin, kExponentMax).
void require_exponent_in_band(double p);

/// Nonlinearity exponent p and frequency omega. The gauge constant is fixed to 0.
class CsParams {
 public:
  CsParams(double p, double omega);

  double p() const { return p_; }
  double omega() const { return omega_; }

  CsParams with_omega(double omega) const { return {p_, omega}; }

 private:
  double p_;
  double omega_;
};

/// Additive terms of an energy functional. For the 1D limit functional the
/// `nonlocal` slot holds the cubic mass term.
struct EnergyBreakdown {
  double kinetic = 0.0;
  double mass = 0.0;
  double nonlocal = 0.0;
  double potential = 0.0;
  double total = 0.0;

  static EnergyBreakdown from_terms(double kinetic, double mass, double nonlocal, double potential) {
    return {kinetic, mass, nonlocal, potential, kinetic + mass + nonlocal + potential};
  }
};

}  // namespace csgauge
