#include "cubiclam/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cubiclam {

bool ContractionRun::is_bad_index(std::uint64_t n) const {
  return std::binary_search(bad_.begin(), bad_.end(), n);
}

ContractionRun simulate_contraction(double q, double b, double s0,
                                    std::vector<std::uint64_t> schedule, std::uint64_t n_max) {
  if (!(q > 0 && q < 1)) throw std::invalid_argument("q must lie in (0, 1)");
  if (!(b > 0)) throw std::invalid_argument("b must be positive");
  if (!(s0 > 0)) throw std::invalid_argument("s0 must be positive");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (schedule[i] <= schedule[i - 1]) {
      throw std::invalid_argument("bad index schedule must be strictly increasing");
    }
  }
  schedule.erase(std::upper_bound(schedule.begin(), schedule.end(), n_max), schedule.end());

  ContractionRun run;
  run.q_ = q;
  run.b_ = b;
  run.s0_ = s0;
  run.trace_.resize(n_max + 1);
  run.trace_[0] = s0;
  auto next_bad = schedule.begin();
  for (std::uint64_t n = 0; n < n_max; ++n) {
    const double s = run.trace_[n];
    if (next_bad != schedule.end() && *next_bad == n) {
      run.trace_[n + 1] = 2 * q * s + b;
      ++next_bad;
    } else {
      run.trace_[n + 1] = q * s;
    }
  }
  run.bad_ = std::move(schedule);
  return run;
}

std::vector<std::uint64_t> linear_gap_schedule(std::uint64_t n_max, std::uint64_t first) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = first, i = 1; n <= n_max; n += i, ++i) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> constant_gap_schedule(std::uint64_t gap, std::uint64_t n_max,
                                                 std::uint64_t first) {
  if (gap == 0) throw std::invalid_argument("gap must be positive");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = first; n <= n_max; n += gap) out.push_back(n);
  return out;
}

EnvelopeReport check_envelope(const ContractionRun& run, double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  EnvelopeReport rep;
  rep.epsilon = epsilon;
  const double q = run.q();
  std::uint64_t n = 1;
  while (!(std::pow(q, n) < 0.125 && std::pow(q, n - 1) * run.b() < epsilon)) ++n;
  rep.gap_threshold = n;

  const auto& bad = run.bad_indices();
  const auto& s = run.trace();
  constexpr double kSlack = 1e-12;
  for (std::size_t i = 0; i + 1 < bad.size(); ++i) {
    if (bad[i + 1] - bad[i] < rep.gap_threshold) continue;
    ++rep.checked_pairs;
    const double bound = s[bad[i]] / 4 + epsilon;
    if (s[bad[i + 1]] > bound * (1 + kSlack)) ++rep.violations;
  }

  const double cap = 4 * epsilon;
  std::optional<std::size_t> from;
  for (std::size_t i = bad.size(); i-- > 0;) {
    if (!(s[bad[i]] < cap)) break;
    from = i;
  }
  rep.below_from = from;
  return rep;
}

double decay_envelope(double c1, double q, std::uint64_t n) {
  if (!(c1 > 0)) throw std::invalid_argument("C1 must be positive");
  if (!(q > 0 && q < 1)) throw std::invalid_argument("q must lie in (0, 1)");
  return c1 * std::pow(q, static_cast<double>(n));
}

}  // namespace cubiclam
