#pragma once

/**
 * @file cubic_map.hpp
 * @brief The slice family f(z) = lambda z + b z^2 + z^3 in double precision.
 */

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cubiclam {

using Complex = std::complex<double>;

class CubicMap {
 public:
  CubicMap(Complex lambda, Complex b);

  Complex lambda() const { return lambda_; }
  Complex b() const { return b_; }
  // max(2, |lambda| + |b| + 2); |f(z)| >= 2|z| beyond it.
  double escape_radius() const { return radius_; }

  Complex operator()(Complex z) const { return z * (lambda_ + z * (b_ + z)); }
  Complex derivative(Complex z) const { return lambda_ + z * (2.0 * b_ + 3.0 * z); }

  // Coefficients of the Boettcher coordinate at infinity,
  // phi(z) = z + c[0] + c[1]/z + c[2]/z^2 + O(z^-3).
  std::array<Complex, 3> bottcher_coefficients() const;

 private:
  Complex lambda_;
  Complex b_;
  double radius_;
};

// Roots of 3z^2 + 2bz + lambda, smaller modulus first, ties by argument.
std::pair<Complex, Complex> critical_points(const CubicMap& f);

// First n <= max_iter with |f^n(z0)| > escape radius; nullopt means bounded
// within the budget.  Throws std::invalid_argument for max_iter == 0.
std::optional<std::uint32_t> escape_iterations(const CubicMap& f, Complex z0,
                                               std::uint32_t max_iter);

// lim 3^-n log|f^n(z)|; 0 when z does not escape within max_iter.
double green_potential(const CubicMap& f, Complex z, std::uint32_t max_iter);

struct RecurrenceRow {
  double radius;
  std::optional<std::uint32_t> return_time;
};

// For each radius, the first 1 <= n <= horizon with |f^n(w) - w| < radius,
// w the second critical point.  Throws std::domain_error when the orbit of w
// escapes within the horizon.
std::vector<RecurrenceRow> recurrence_diagnostic(const CubicMap& f, std::uint32_t horizon,
                                                 const std::vector<double>& radii);

}  // namespace cubiclam
