#include "csgauge/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace csgauge {

bool exponent_in_band(double p) { return std::isfinite(p) && p > kExponentMin && p < kExponentMax; }

void require_exponent_in_band(double p) {
  if (!exponent_in_band(p)) {
    throw std::domain_error("exponent p = " + std::to_string(p) + " outside the supported band (" +
                            std::to_string(kExponentMin) + ", " + std::to_string(kExponentMax) + ")");
  }
}

CsParams::CsParams(double p, double omega) : p_(p), omega_(omega) {
  require_exponent_in_band(p);
  if (!std::isfinite(omega) || omega < 0.0) {
    throw std::domain_error("frequency omega must be finite and nonnegative");
  }
}

}  // namespace csgauge
