#pragma once

/**
 * @file rays.hpp
 * @brief Dynamic rays R_f(theta) and parameter rays R_lambda(theta) by Newton
 *        continuation on the Boettcher equation.
 *
 * A dynamic ray sample at potential t solves phi(f^n(z)) = exp(3^n (t + 2 pi i theta))
 * for the smallest n that puts f^n(z) where the truncated Boettcher series is
 * exact to double precision.  A parameter ray sample solves the same equation
 * in b for the critical value: the co-critical point of the escaping critical
 * point has Boettcher coordinate exp(t + 2 pi i theta).
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubiclam/angle.hpp"
#include "cubiclam/cubic_map.hpp"
#include "cubiclam/quad_gap.hpp"

namespace cubiclam {

enum class RayKind { Dynamic, Parameter };

struct RaySample {
  double t;
  Complex point;
};

struct RayPath {
  RayKind kind;
  Angle angle;
  Complex lambda;
  Complex b;  // the map's b for dynamic rays; unused for parameter rays
  std::vector<RaySample> samples;  // strictly decreasing in t
};

struct RayOptions {
  // Potential ratio between continuation steps, t_{j+1} = ratio * t_j.
  double ratio = 0.9;
  // Step halvings allowed for one continuation step.
  unsigned max_retries = 30;
  unsigned newton_iterations = 60;
  // Largest accepted residual: the Newton correction |F / F'| in the unknown.
  double tolerance = 1e-10;
};

class RayTraceError : public std::runtime_error {
 public:
  RayTraceError(const std::string& what, RayPath partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  // Samples accepted before the failure.
  const RayPath& partial() const { return partial_; }

 private:
  RayPath partial_;
};

class NewtonDivergence : public RayTraceError {
  using RayTraceError::RayTraceError;
};

class PrecriticalCollision : public RayTraceError {
  using RayTraceError::RayTraceError;
};

// steps + 1 samples at t_hi (t_lo / t_hi)^{j / steps}.  Throws
// std::invalid_argument unless t_hi > t_lo > 0 and steps >= 1.
RayPath trace_dynamic_ray(const CubicMap& f, const Angle& theta, double t_hi, double t_lo,
                          unsigned steps, const RayOptions& options = {});

RayPath trace_parameter_ray(Complex lambda, const Angle& theta, double t_hi, double t_lo,
                            unsigned steps, const RayOptions& options = {});

// Newton correction |F(z) / F'(z)| for F(z) = log phi(f^n(z)) - 3^n (t + 2 pi i theta),
// the distance from z to the exact ray point to first order.
double dynamic_ray_residual(const CubicMap& f, const Angle& theta, double t, Complex z);

// Same in b for a parameter sample, using the faster-escaping critical point.
double parameter_ray_residual(Complex lambda, const Angle& theta, double t, Complex b);

struct WakeOptions {
  double t_lo = 1e-9;
  std::uint32_t max_iter = 2000;
  RayOptions ray;
};

// Whether R_f(theta1 + 1/3) and R_f(theta2 + 2/3) end within tol of each other
// at potential t_lo.  Throws std::domain_error if a critical orbit escapes.
bool wake_membership(Complex lambda, Complex b, const PQPGHole& hole, double tol,
                     const WakeOptions& options = {});

// Distance between the t_lo endpoints used by wake_membership.
double wake_ray_gap(Complex lambda, Complex b, const PQPGHole& hole,
                    const WakeOptions& options = {});

// exp(2 pi i p/q) style multiplier for a rational rotation.
Complex root_of_unity(const Angle& turn);

}  // namespace cubiclam
