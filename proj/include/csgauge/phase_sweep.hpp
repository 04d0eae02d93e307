#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace csgauge {

struct SweepRow {
  double p = 0.0;
  double m = 0.0;
  double omega0 = 0.0;
  double omega1 = 0.0;
  double omega_bar = 0.0;
};

/// steps + 1 equally spaced exponents on [pmin, pmax]; each row satisfies
/// omega0 < omega1 < omega_bar. Throws std::domain_error outside the band.
std::vector<SweepRow> compute_sweep(double pmin, double pmax, std::size_t steps);

/// 9 significant digits, '.' separator, locale independent.
std::string format_csv_number(double value);

/// Header `p,m,omega0,omega1,omega_bar` followed by one line per row, '\n' endings.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace csgauge
