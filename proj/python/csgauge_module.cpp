#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>

#include "csgauge/cs_energy.hpp"
#include "csgauge/limit_problem.hpp"
#include "csgauge/minimizer.hpp"
#include "csgauge/phase_sweep.hpp"
#include "csgauge/verification.hpp"

namespace py = pybind11;
using namespace csgauge;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Field to_field(const Array& values, double a, double b) {
  auto v = values.unchecked<1>();
  if (v.shape(0) < 2) throw py::value_error("need at least two samples");
  std::vector<double> data(v.data(0), v.data(0) + v.shape(0));
  const Mesh1D mesh(a, b, data.size() - 1);
  return Field(mesh, std::move(data));
}

// The single-size constructor picks up zero strides together with c_style.
Array make_array(py::ssize_t n) { return Array(std::vector<py::ssize_t>{n}); }

Array to_array(std::span<const double> values) {
  Array out = make_array(static_cast<py::ssize_t>(values.size()));
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

py::dict breakdown(const EnergyBreakdown& e) {
  py::dict d;
  d["kinetic"] = e.kinetic;
  d["mass"] = e.mass;
  d["nonlocal"] = e.nonlocal;
  d["potential"] = e.potential;
  d["total"] = e.total;
  return d;
}

}  // namespace

PYBIND11_MODULE(_csgauge, m) {
  m.doc() = "Radial Chern-Simons-Schroedinger energies, limit solitons and frequency thresholds";

  py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_RuntimeError);

  m.def("soliton_mass", &soliton_mass, py::arg("p"));
  m.def("omega0", &omega0, py::arg("p"));
  m.def("omega1", &omega1, py::arg("p"));
  m.def("nonexistence_threshold", &nonexistence_threshold, py::arg("p"));
  m.def("degenerate_root", &degenerate_root, py::arg("p"));

  m.def(
      "thresholds",
      [](double p) {
        const Thresholds t = thresholds(p);
        py::dict d;
        d["p"] = t.p;
        d["m"] = t.m;
        d["omega0"] = t.omega0;
        d["omega1"] = t.omega1;
        d["omega_bar"] = t.omega_bar;
        return d;
      },
      py::arg("p"));

  m.def(
      "solve_eq_k",
      [](double p, double omega) {
        const RootReport r = solve_eq_k(CsParams(p, omega));
        py::dict d;
        d["count"] = r.count;
        d["k1"] = r.k1;
        d["k2"] = r.k2;
        return d;
      },
      py::arg("p"), py::arg("omega"));

  m.def(
      "psi_curve", [](double k, double p, double omega) { return psi_curve(k, CsParams(p, omega)); }, py::arg("k"),
      py::arg("p"), py::arg("omega"));

  m.def(
      "soliton_wk",
      [](double p, double k, const Array& r) {
        const SolitonParams sp(p, k);
        auto x = r.unchecked<1>();
        Array out = make_array(x.shape(0));
        auto o = out.mutable_unchecked<1>();
        for (py::ssize_t i = 0; i < x.shape(0); ++i) o(i) = soliton_wk(sp, x(i));
        return out;
      },
      py::arg("p"), py::arg("k"), py::arg("r"));

  m.def(
      "energy_I",
      [](const Array& u, double radius, double p, double omega) {
        return breakdown(energy_I(to_field(u, 0.0, radius), CsParams(p, omega)));
      },
      py::arg("u"), py::arg("radius"), py::arg("p"), py::arg("omega"),
      "Energy of samples u on the uniform radial grid [0, radius].");

  m.def(
      "energy_J",
      [](const Array& u, double a, double b, double p, double omega) {
        return breakdown(energy_J(to_field(u, a, b), CsParams(p, omega)));
      },
      py::arg("u"), py::arg("a"), py::arg("b"), py::arg("p"), py::arg("omega"));

  m.def("cs_inequality_gap", [](const Array& u, double radius) { return cs_inequality_gap(to_field(u, 0.0, radius)); },
        py::arg("u"), py::arg("radius"));

  m.def(
      "minimize_on_ball",
      [](double p, double omega, double radius, std::size_t n, const std::string& init, double rho,
         std::size_t max_iters, double grad_tol) {
        MinimizeConfig cfg;
        cfg.radius = radius;
        cfg.n = n > 0 ? n : static_cast<std::size_t>(std::ceil(radius / 0.05));
        cfg.max_iters = max_iters;
        cfg.grad_tol = grad_tol;
        if (init == "zero_plus_bump") {
          cfg.init = ZeroPlusBump{};
        } else if (init == "translated_soliton") {
          cfg.init = TranslatedSoliton{rho};
        } else {
          throw py::value_error("init must be 'zero_plus_bump' or 'translated_soliton'");
        }
        std::optional<MinimizeResult> found;
        {
          py::gil_scoped_release release;
          found = minimize_on_ball(CsParams(p, omega), cfg);
        }
        const MinimizeResult& res = *found;
        py::dict d;
        d["r"] = to_array(res.u.mesh().nodes());
        d["u"] = to_array(res.u.values());
        d["energy"] = breakdown(res.energy);
        d["initial_energy"] = res.initial_energy;
        d["iters"] = res.iters;
        d["grad_norm"] = res.grad_norm;
        d["centroid_xi"] = res.centroid_xi;
        d["l2_mass"] = res.l2_mass;
        d["converged"] = res.converged;
        return d;
      },
      py::arg("p"), py::arg("omega"), py::arg("radius"), py::arg("n") = 0, py::arg("init") = "zero_plus_bump",
      py::arg("rho") = 0.0, py::arg("max_iters") = 20000, py::arg("grad_tol") = 1e-6);

  m.def(
      "sweep",
      [](double pmin, double pmax, std::size_t steps) {
        const auto rows = compute_sweep(pmin, pmax, steps);
        py::array_t<double> out({static_cast<py::ssize_t>(rows.size()), py::ssize_t{5}});
        auto o = out.mutable_unchecked<2>();
        for (std::size_t i = 0; i < rows.size(); ++i) {
          const auto s = static_cast<py::ssize_t>(i);
          o(s, 0) = rows[i].p;
          o(s, 1) = rows[i].m;
          o(s, 2) = rows[i].omega0;
          o(s, 3) = rows[i].omega1;
          o(s, 4) = rows[i].omega_bar;
        }
        return out;
      },
      py::arg("pmin") = 1.1, py::arg("pmax") = 2.9, py::arg("steps") = 180,
      "Rows of (p, m, omega0, omega1, omega_bar).");

  m.def(
      "verify",
      [](bool full, std::uint64_t seed) {
        verification::Options options;
        options.level = full ? verification::Level::full : verification::Level::fast;
        options.seed = seed;
        std::vector<verification::CheckResult> results;
        {
          py::gil_scoped_release release;
          results = verification::run(options);
        }
        py::list out;
        for (const auto& r : results) {
          py::dict d;
          d["name"] = r.name;
          d["measured"] = r.measured;
          d["tolerance"] = r.tolerance;
          d["passed"] = r.passed;
          out.append(d);
        }
        return out;
      },
      py::arg("full") = false, py::arg("seed") = verification::Options{}.seed);
}
