#include "csgauge/phase_sweep.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

#include "csgauge/limit_problem.hpp"

namespace csgauge {

std::vector<SweepRow> compute_sweep(double pmin, double pmax, std::size_t steps) {
  require_exponent_in_band(pmin);
  require_exponent_in_band(pmax);
  if (!(pmax > pmin) || steps == 0) throw std::domain_error("sweep: need pmin < pmax and steps >= 1");
  std::vector<SweepRow> rows;
  rows.reserve(steps + 1);
  const double dp = (pmax - pmin) / static_cast<double>(steps);
  for (std::size_t i = 0; i <= steps; ++i) {
    const double p = i == steps ? pmax : pmin + static_cast<double>(i) * dp;
    const Thresholds t = thresholds(p);
    rows.push_back({p, t.m, t.omega0, t.omega1, t.omega_bar});
  }
  return rows;
}

std::string format_csv_number(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 9);
  return std::string(buf.data(), res.ptr);
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "p,m,omega0,omega1,omega_bar\n";
  for (const auto& row : rows) {
    out += format_csv_number(row.p) + ',' + format_csv_number(row.m) + ',' + format_csv_number(row.omega0) + ',' +
           format_csv_number(row.omega1) + ',' + format_csv_number(row.omega_bar) + '\n';
  }
  return out;
}

}  // namespace csgauge
