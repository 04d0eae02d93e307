#include "csgauge/radial_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace csgauge {

Mesh1D::Mesh1D(double a, double b, std::size_t n) : a_(a), b_(b), n_(n), spacing_(0.0) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw std::invalid_argument("Mesh1D: need finite endpoints with b > a");
  }
  if (n == 0) {
    throw std::invalid_argument("Mesh1D: need at least one interval");
  }
  spacing_ = (b - a) / static_cast<double>(n);
}

std::vector<double> Mesh1D::nodes() const {
  std::vector<double> x(size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = node(i);
  return x;
}

Field::Field(Mesh1D mesh) : mesh_(mesh), values_(mesh.size(), 0.0) {}

Field::Field(Mesh1D mesh, std::vector<double> values) : mesh_(mesh), values_(std::move(values)) {
  if (values_.size() != mesh_.size()) {
    throw std::invalid_argument("Field: expected " + std::to_string(mesh_.size()) + " values, got " +
                                std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("Field: non-finite value");
  }
}

Field Field::sample(const Mesh1D& mesh, const std::function<double(double)>& f) {
  std::vector<double> v(mesh.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(mesh.node(i));
  return Field(mesh, std::move(v));
}

double Field::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

void require_same_mesh(const Field& a, const Field& b) {
  if (!(a.mesh() == b.mesh())) throw std::invalid_argument("fields live on different meshes");
}

std::vector<double> trapezoid_weights(const Mesh1D& mesh) {
  std::vector<double> w(mesh.size(), mesh.spacing());
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

double integrate_line(const Field& f) {
  const auto v = f.values();
  double interior = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) interior += v[i];
  return f.mesh().spacing() * (interior + 0.5 * (v.front() + v.back()));
}

double integrate_radial(const Field& f) {
  const Mesh1D& mesh = f.mesh();
  if (mesh.a() != 0.0) throw std::domain_error("integrate_radial: mesh must start at r = 0");
  const auto v = f.values();
  double interior = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) interior += v[i] * mesh.node(i);
  const double sum = interior + 0.5 * v.back() * mesh.b();
  return 2.0 * std::numbers::pi * mesh.spacing() * sum;
}

Field prefix_integral(const Field& f, PrefixWeight weight) {
  const Mesh1D& mesh = f.mesh();
  const auto v = f.values();
  std::vector<double> g(v.size(), 0.0);
  auto integrand = [&](std::size_t i) {
    return weight == PrefixWeight::times_r ? v[i] * mesh.node(i) : v[i];
  };
  const double half_h = 0.5 * mesh.spacing();
  double prev = integrand(0);
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double cur = integrand(i);
    g[i] = g[i - 1] + half_h * (prev + cur);
    prev = cur;
  }
  return Field(mesh, std::move(g));
}

Field suffix_integral(const Field& f, SuffixWeight weight) {
  const Mesh1D& mesh = f.mesh();
  const auto v = f.values();
  std::vector<double> g(v.size(), 0.0);
  auto integrand = [&](std::size_t i) {
    if (weight == SuffixWeight::plain) return v[i];
    const double r = mesh.node(i);
    return r == 0.0 ? 0.0 : v[i] / r;
  };
  const double half_h = 0.5 * mesh.spacing();
  const std::size_t last = v.size() - 1;
  double next = integrand(last);
  for (std::size_t i = last; i-- > 0;) {
    const double cur = integrand(i);
    g[i] = g[i + 1] + half_h * (cur + next);
    next = cur;
  }
  return Field(mesh, std::move(g));
}

Field derivative(const Field& f) {
  const Mesh1D& mesh = f.mesh();
  if (mesh.intervals() < 2) throw std::domain_error("derivative: need at least two intervals");
  const auto v = f.values();
  const std::size_t n = mesh.intervals();
  const double inv2h = 0.5 / mesh.spacing();
  std::vector<double> d(v.size());
  d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) * inv2h;
  for (std::size_t i = 1; i < n; ++i) d[i] = (v[i + 1] - v[i - 1]) * inv2h;
  d[n] = (3.0 * v[n] - 4.0 * v[n - 1] + v[n - 2]) * inv2h;
  return Field(mesh, std::move(d));
}

Field second_derivative(const Field& f) {
  const Mesh1D& mesh = f.mesh();
  if (mesh.intervals() < 2) throw std::domain_error("second_derivative: need at least two intervals");
  const auto v = f.values();
  const std::size_t n = mesh.intervals();
  const double inv_h2 = 1.0 / (mesh.spacing() * mesh.spacing());
  std::vector<double> d(v.size());
  for (std::size_t i = 1; i < n; ++i) d[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) * inv_h2;
  d[0] = d[1];
  d[n] = d[n - 1];
  return Field(mesh, std::move(d));
}

}  // namespace csgauge
