#include "cubiclam/rays.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace cubiclam {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// |f^n(z)| / R >= e^kSeriesMargin where the Boettcher series is evaluated.
constexpr double kSeriesMargin = 8.0;
constexpr unsigned kMaxLevel = 90;
constexpr double kStartPotential = 6.0;
constexpr std::uint32_t kCriticalPotentialIterations = 4000;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double pow3(unsigned n) { return std::pow(3.0, static_cast<double>(n)); }

// frac(3^n theta) as a double, computed exactly first.
double tripled_fraction(const Angle& theta, unsigned n) {
  Angle a = theta;
  for (unsigned i = 0; i < n; ++i) a = a.times(3);
  return a.to_double();
}

// Smallest n with 3^(n + shift) t >= log(radius) + margin.
unsigned level_for(double t, double radius, unsigned shift) {
  const double need = std::log(radius) + kSeriesMargin;
  unsigned n = 0;
  while (pow3(n + shift) * t < need) {
    if (++n > kMaxLevel) throw std::invalid_argument("potential too small for double precision");
  }
  return n;
}

struct LogPhi {
  Complex value;
  Complex derivative;  // d/dw
};

LogPhi log_phi(const CubicMap& f, Complex w) {
  const auto c = f.bottcher_coefficients();
  const Complex inv = 1.0 / w;
  const Complex tail = 1.0 + inv * (c[0] + inv * (c[1] + inv * c[2]));
  const Complex dtail = -inv * inv * (c[0] + inv * (2.0 * c[1] + inv * 3.0 * c[2]));
  return {std::log(w) + std::log(tail), inv + dtail / tail};
}

Complex wrap(Complex r) { return {r.real(), std::remainder(r.imag(), kTwoPi)}; }

struct Eval {
  Complex residual;
  Complex derivative;
};

// One continuation problem: for potential t, a level, a target, and an
// evaluation of residual and derivative in the unknown.
struct RayProblem {
  std::function<unsigned(double t, Complex guess)> level;
  std::function<Complex(double t, unsigned n)> target;
  std::function<std::optional<Eval>(unsigned n, Complex target, Complex x)> eval;
  std::function<double(unsigned n)> target_rate;  // d target / dt
  std::function<void(Complex x)> accept;          // continuity bookkeeping
};

struct Solution {
  Complex x;
  Complex dxdt;
  double residual;
};

std::optional<Solution> newton(const RayProblem& prob, double t, Complex guess,
                               const RayOptions& opt) {
  const unsigned n = prob.level(t, guess);
  const Complex target = prob.target(t, n);
  Complex x = guess;
  for (unsigned it = 0; it < opt.newton_iterations; ++it) {
    const auto e = prob.eval(n, target, x);
    if (!e || !finite(e->derivative) || e->derivative == Complex{}) return std::nullopt;
    const Complex step = e->residual / e->derivative;
    x -= step;
    if (!finite(x)) return std::nullopt;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(x))) break;
  }
  const auto e = prob.eval(n, target, x);
  if (!e) return std::nullopt;
  const double res = std::abs(e->residual / e->derivative);
  if (!(res <= opt.tolerance)) return std::nullopt;
  return Solution{x, prob.target_rate(n) / e->derivative, res};
}

using FailureFactory = std::function<void(double t_from, double t_to, RayPath partial)>;

RayPath continue_ray(RayPath path, const RayProblem& prob, Complex start_guess, double t_hi,
                     double t_lo, unsigned steps, const RayOptions& opt,
                     const FailureFactory& fail) {
  if (!(t_hi > t_lo && t_lo > 0)) throw std::invalid_argument("need t_hi > t_lo > 0");
  if (steps == 0) throw std::invalid_argument("steps must be at least 1");
  if (!(opt.ratio > 0 && opt.ratio < 1)) throw std::invalid_argument("ratio must lie in (0, 1)");

  double t = std::max(t_hi, kStartPotential);
  auto first = newton(prob, t, start_guess, opt);
  if (!first) {
    fail(t, t, path);
    throw NewtonDivergence("initial ray point did not converge", path);
  }
  Solution cur = *first;
  prob.accept(cur.x);

  const double log_ratio = std::log(t_lo / t_hi);
  for (unsigned j = 0; j <= steps; ++j) {
    const double t_out = j == steps ? t_lo : t_hi * std::exp(log_ratio * j / steps);
    double ratio = opt.ratio;
    unsigned retries = 0;
    while (t > t_out) {
      const double t_next = std::max(t_out, t * ratio);
      const Complex pred = cur.x + cur.dxdt * (t_next - t);
      auto sol = newton(prob, t_next, pred, opt);
      const double jump = sol ? std::abs(sol->x - pred) : 0.0;
      const double allowed = 0.5 * std::abs(pred - cur.x) + 1e-12 * (1.0 + std::abs(cur.x));
      if (sol && jump <= allowed) {
        cur = *sol;
        prob.accept(cur.x);
        t = t_next;
        ratio = opt.ratio;
        retries = 0;
        continue;
      }
      if (++retries > opt.max_retries) {
        fail(t, t_next, path);
        throw NewtonDivergence("continuation failed below potential " + std::to_string(t), path);
      }
      ratio = std::sqrt(ratio);
    }
    path.samples.push_back({t_out, cur.x});
  }
  return path;
}

// Potentials of precritical points are G(omega) / 3^k.
bool near_precritical_potential(const CubicMap& f, double t_from, double t_to) {
  const auto [w1, w2] = critical_points(f);
  for (Complex w : {w1, w2}) {
    const double g = green_potential(f, w, kCriticalPotentialIterations);
    if (g <= 0) continue;
    for (double p = g; p >= 0.5 * t_to; p /= 3) {
      if (p <= 1.05 * t_from && p >= 0.95 * t_to) return true;
    }
  }
  return false;
}

Complex dynamic_start(const CubicMap& f, const Angle& theta, double t) {
  const auto c = f.bottcher_coefficients();
  const Complex w = std::exp(Complex(t, kTwoPi * theta.to_double()));
  return w - c[0] - c[1] / w;
}

std::optional<Eval> eval_dynamic(const CubicMap& f, unsigned n, Complex target, Complex z) {
  Complex w = z;
  Complex dw = 1.0;
  for (unsigned k = 0; k < n; ++k) {
    dw *= f.derivative(w);
    w = f(w);
  }
  if (!finite(w) || !finite(dw) || std::abs(w) <= f.escape_radius()) return std::nullopt;
  const LogPhi lp = log_phi(f, w);
  return Eval{wrap(lp.value - target), lp.derivative * dw};
}

// Critical point of f_{lambda,b} nearest to a reference.
Complex tracked_critical(const CubicMap& f, Complex reference) {
  const auto [w1, w2] = critical_points(f);
  return std::abs(w1 - reference) < std::abs(w2 - reference) ? w1 : w2;
}

std::optional<Eval> eval_parameter(Complex lambda, Complex b, Complex omega, unsigned n,
                                   Complex target) {
  const CubicMap f(lambda, b);
  Complex z = f(omega);
  Complex dz = omega * omega;
  for (unsigned k = 0; k < n; ++k) {
    dz = f.derivative(z) * dz + z * z;
    z = f(z);
  }
  if (!finite(z) || !finite(dz) || std::abs(z) <= f.escape_radius()) return std::nullopt;
  const LogPhi lp = log_phi(f, z);
  return Eval{wrap(lp.value - target), lp.derivative * dz};
}

}  // namespace

Complex root_of_unity(const Angle& turn) {
  return std::polar(1.0, kTwoPi * turn.to_double());
}

RayPath trace_dynamic_ray(const CubicMap& f, const Angle& theta, double t_hi, double t_lo,
                          unsigned steps, const RayOptions& options) {
  RayProblem prob;
  prob.level = [&](double t, Complex) { return level_for(t, f.escape_radius(), 0); };
  prob.target = [&](double t, unsigned n) {
    return Complex(pow3(n) * t, kTwoPi * tripled_fraction(theta, n));
  };
  prob.eval = [&](unsigned n, Complex target, Complex z) {
    return eval_dynamic(f, n, target, z);
  };
  prob.target_rate = [](unsigned n) { return pow3(n); };
  prob.accept = [](Complex) {};

  RayPath path{RayKind::Dynamic, theta, f.lambda(), f.b(), {}};
  const FailureFactory fail = [&](double t_from, double t_to, RayPath partial) {
    if (near_precritical_potential(f, t_from, t_to)) {
      throw PrecriticalCollision("dynamic ray " + theta.to_string() +
                                     " meets a precritical point near potential " +
                                     std::to_string(t_to),
                                 std::move(partial));
    }
  };
  const double t0 = std::max(t_hi, kStartPotential);
  return continue_ray(std::move(path), prob, dynamic_start(f, theta, t0), t_hi, t_lo, steps,
                      options, fail);
}

RayPath trace_parameter_ray(Complex lambda, const Angle& theta, double t_hi, double t_lo,
                            unsigned steps, const RayOptions& options) {
  const double t0 = std::max(t_hi, kStartPotential);
  const Complex b0 = 1.5 * std::exp(Complex(t0, kTwoPi * theta.to_double()));
  // The escaping critical point is followed by continuity from -2b/3.
  Complex omega_ref = -2.0 * b0 / 3.0;

  RayProblem prob;
  prob.level = [&](double t, Complex b) {
    return level_for(t, CubicMap(lambda, b).escape_radius(), 1);
  };
  prob.target = [&](double t, unsigned n) {
    return Complex(pow3(n + 1) * t, kTwoPi * tripled_fraction(theta, n + 1));
  };
  Complex omega_iter = omega_ref;
  prob.eval = [&](unsigned n, Complex target, Complex b) -> std::optional<Eval> {
    if (!finite(b)) return std::nullopt;
    const Complex omega = tracked_critical(CubicMap(lambda, b), omega_ref);
    omega_iter = omega;
    return eval_parameter(lambda, b, omega, n, target);
  };
  prob.target_rate = [](unsigned n) { return pow3(n + 1); };
  prob.accept = [&](Complex) { omega_ref = omega_iter; };

  RayPath path{RayKind::Parameter, theta, lambda, Complex{}, {}};
  const FailureFactory fail = [](double, double, RayPath) {};
  return continue_ray(std::move(path), prob, b0, t_hi, t_lo, steps, options, fail);
}

double dynamic_ray_residual(const CubicMap& f, const Angle& theta, double t, Complex z) {
  const unsigned n = level_for(t, f.escape_radius(), 0);
  const Complex target(pow3(n) * t, kTwoPi * tripled_fraction(theta, n));
  const auto e = eval_dynamic(f, n, target, z);
  return e ? std::abs(e->residual / e->derivative) : std::numeric_limits<double>::infinity();
}

double parameter_ray_residual(Complex lambda, const Angle& theta, double t, Complex b) {
  const CubicMap f(lambda, b);
  const auto [w1, w2] = critical_points(f);
  const double g1 = green_potential(f, w1, kCriticalPotentialIterations);
  const double g2 = green_potential(f, w2, kCriticalPotentialIterations);
  const Complex omega = g1 > g2 ? w1 : w2;
  const unsigned n = level_for(t, f.escape_radius(), 1);
  const Complex target(pow3(n + 1) * t, kTwoPi * tripled_fraction(theta, n + 1));
  const auto e = eval_parameter(lambda, b, omega, n, target);
  return e ? std::abs(e->residual / e->derivative) : std::numeric_limits<double>::infinity();
}

double wake_ray_gap(Complex lambda, Complex b, const PQPGHole& hole, const WakeOptions& options) {
  const CubicMap f(lambda, b);
  const auto [w1, w2] = critical_points(f);
  if (escape_iterations(f, w1, options.max_iter) || escape_iterations(f, w2, options.max_iter)) {
    throw std::domain_error("a critical orbit escapes; the Julia set is disconnected");
  }
  const Angle a = hole.hole.start() + Angle(1, 3);
  const Angle c = hole.hole.end() + Angle(2, 3);
  const double t_hi = 1.0;
  const RayPath ra = trace_dynamic_ray(f, a, t_hi, options.t_lo, 1, options.ray);
  const RayPath rc = trace_dynamic_ray(f, c, t_hi, options.t_lo, 1, options.ray);
  return std::abs(ra.samples.back().point - rc.samples.back().point);
}

bool wake_membership(Complex lambda, Complex b, const PQPGHole& hole, double tol,
                     const WakeOptions& options) {
  return wake_ray_gap(lambda, b, hole, options) < tol;
}

}  // namespace cubiclam
