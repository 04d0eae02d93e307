#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace csgauge {

/// Uniform grid on [a, b] with n intervals (n + 1 nodes).
///
/// Used both for radial domains [0, R] and for truncated lines [-L, L].
class Mesh1D {
 public:
  Mesh1D(double a, double b, std::size_t n);

  /// Centered line mesh [-half_width, half_width].
  static Mesh1D centered(double half_width, std::size_t n) { return {-half_width, half_width, n}; }

  double a() const { return a_; }
  double b() const { return b_; }
  std::size_t intervals() const { return n_; }
  std::size_t size() const { return n_ + 1; }
  double spacing() const { return spacing_; }

  /// Node i; node(intervals()) returns b exactly.
  double node(std::size_t i) const { return i == n_ ? b_ : a_ + static_cast<double>(i) * spacing_; }
  std::vector<double> nodes() const;

  bool operator==(const Mesh1D& other) const = default;

 private:
  double a_;
  double b_;
  std::size_t n_;
  double spacing_;
};

/// Real samples of a function on a Mesh1D. Values are always finite.
class Field {
 public:
  explicit Field(Mesh1D mesh);  // zero field
  Field(Mesh1D mesh, std::vector<double> values);

  static Field sample(const Mesh1D& mesh, const std::function<double(double)>& f);

  const Mesh1D& mesh() const { return mesh_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  double max_abs() const;

 private:
  Mesh1D mesh_;
  std::vector<double> values_;
};

enum class PrefixWeight { plain, times_r };
enum class SuffixWeight { plain, inverse_r };

/// Composite trapezoid rule over [a, b].
double integrate_line(const Field& f);

/// 2*pi * int_0^b f(r) r dr by the trapezoid rule. Requires a == 0.
double integrate_radial(const Field& f);

/// Trapezoid weights w_i such that integrate_line(f) = sum_i w_i f_i.
std::vector<double> trapezoid_weights(const Mesh1D& mesh);

/// g(x_i) = int_a^{x_i} f(s) w(s) ds, w in {1, s}.
Field prefix_integral(const Field& f, PrefixWeight weight);

/// g(x_i) = int_{x_i}^b f(s) w(s) ds, w in {1, 1/s}.
/// With inverse_r the integrand at s = 0 is taken to be 0.
Field suffix_integral(const Field& f, SuffixWeight weight);

/// Second-order first derivative: central in the interior, one-sided three-point
/// stencils at both ends. Needs at least two intervals.
Field derivative(const Field& f);

/// Three-point second derivative on interior nodes; the end values are copied
/// from their neighbours. Needs at least two intervals.
Field second_derivative(const Field& f);

/// Requires a and b to share the same mesh; throws std::invalid_argument otherwise.
void require_same_mesh(const Field& a, const Field& b);

}  // namespace csgauge
