#include "cubiclam/cubic_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cubiclam {

namespace {

// Past this modulus the truncated Boettcher series is exact to double precision.
constexpr double kBottcherRadius = 1e6;
constexpr std::uint32_t kExtraIterations = 200;

}  // namespace

CubicMap::CubicMap(Complex lambda, Complex b)
    : lambda_(lambda), b_(b), radius_(std::max(2.0, std::abs(lambda) + std::abs(b) + 2.0)) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()) ||
      !std::isfinite(b.real()) || !std::isfinite(b.imag())) {
    throw std::invalid_argument("cubic map parameters must be finite");
  }
}

std::array<Complex, 3> CubicMap::bottcher_coefficients() const {
  const Complex c0 = b_ / 3.0;
  const Complex c1 = lambda_ / 3.0 - b_ * b_ / 9.0;
  const Complex c2 = (c0 - c0 * c0 * c0 - 6.0 * c0 * c1) / 3.0;
  return {c0, c1, c2};
}

std::pair<Complex, Complex> critical_points(const CubicMap& f) {
  // 3z^2 + 2bz + lambda: z = (-b -+ sqrt(b^2 - 3 lambda)) / 3, taking the
  // larger root first and the other from the product lambda / 3.
  const Complex b = f.b();
  const Complex lambda = f.lambda();
  const Complex disc = std::sqrt(b * b - 3.0 * lambda);
  Complex big = (std::abs(-b - disc) >= std::abs(-b + disc)) ? (-b - disc) / 3.0
                                                             : (-b + disc) / 3.0;
  Complex small = (big == Complex{}) ? Complex{} : lambda / (3.0 * big);
  auto key = [](Complex z) { return std::pair{std::abs(z), std::arg(z)}; };
  if (key(big) < key(small)) std::swap(big, small);
  return {small, big};
}

std::optional<std::uint32_t> escape_iterations(const CubicMap& f, Complex z0,
                                               std::uint32_t max_iter) {
  if (max_iter == 0) throw std::invalid_argument("max_iter must be at least 1");
  const double r2 = f.escape_radius() * f.escape_radius();
  Complex z = z0;
  for (std::uint32_t n = 1; n <= max_iter; ++n) {
    z = f(z);
    if (std::norm(z) > r2) return n;
  }
  return std::nullopt;
}

double green_potential(const CubicMap& f, Complex z, std::uint32_t max_iter) {
  const double r = f.escape_radius();
  std::uint32_t n = 0;
  while (std::abs(z) <= r) {
    if (n == max_iter) return 0.0;
    z = f(z);
    ++n;
  }
  for (std::uint32_t extra = 0; std::abs(z) < kBottcherRadius && extra < kExtraIterations;
       ++extra) {
    z = f(z);
    ++n;
  }
  const auto c = f.bottcher_coefficients();
  const Complex inv = 1.0 / z;
  const Complex tail = 1.0 + inv * (c[0] + inv * (c[1] + inv * c[2]));
  const double log_phi = std::log(std::abs(z)) + std::log(std::abs(tail));
  return log_phi / std::pow(3.0, static_cast<double>(n));
}

std::vector<RecurrenceRow> recurrence_diagnostic(const CubicMap& f, std::uint32_t horizon,
                                                 const std::vector<double>& radii) {
  if (horizon == 0) throw std::invalid_argument("horizon must be at least 1");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0) || (i > 0 && radii[i] >= radii[i - 1])) {
      throw std::invalid_argument("radii must be positive and strictly decreasing");
    }
  }
  const Complex w = critical_points(f).second;
  if (escape_iterations(f, w, horizon)) {
    throw std::domain_error("the second critical point escapes within the horizon");
  }
  std::vector<double> dist;
  dist.reserve(horizon);
  Complex z = w;
  for (std::uint32_t n = 1; n <= horizon; ++n) {
    z = f(z);
    dist.push_back(std::abs(z - w));
  }
  std::vector<RecurrenceRow> out;
  for (double delta : radii) {
    RecurrenceRow row{delta, std::nullopt};
    for (std::uint32_t n = 1; n <= horizon; ++n) {
      if (dist[n - 1] < delta) {
        row.return_time = n;
        break;
      }
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace cubiclam
