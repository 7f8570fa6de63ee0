#pragma once

/**
 * @file contraction.hpp
 * @brief Simulator for sequences with s_{n+1} = q s_n at good indices and
 *        s_{n+1} = 2q s_n + b at bad indices.
 */

#include <cstdint>
#include <optional>
#include <vector>

namespace cubiclam {

class ContractionRun {
 public:
  double q() const { return q_; }
  double b() const { return b_; }
  double s0() const { return s0_; }
  const std::vector<std::uint64_t>& bad_indices() const { return bad_; }
  // trace()[n] = s_n for n = 0 .. n_max.
  const std::vector<double>& trace() const { return trace_; }
  bool is_bad_index(std::uint64_t n) const;

 private:
  friend ContractionRun simulate_contraction(double, double, double, std::vector<std::uint64_t>,
                                             std::uint64_t);
  double q_ = 0, b_ = 0, s0_ = 0;
  std::vector<std::uint64_t> bad_;
  std::vector<double> trace_;
};

// Bad indices beyond n_max are dropped.  Throws std::invalid_argument unless
// 0 < q < 1, b > 0, s0 > 0 and the schedule is strictly increasing.
ContractionRun simulate_contraction(double q, double b, double s0,
                                    std::vector<std::uint64_t> bad_index_schedule,
                                    std::uint64_t n_max);

// n_1 = first, n_{i+1} = n_i + i.
std::vector<std::uint64_t> linear_gap_schedule(std::uint64_t n_max, std::uint64_t first = 1);
// n_1 = first, n_{i+1} = n_i + gap.
std::vector<std::uint64_t> constant_gap_schedule(std::uint64_t gap, std::uint64_t n_max,
                                                 std::uint64_t first = 1);

struct EnvelopeReport {
  double epsilon = 0;
  // Smallest N >= 1 with q^N < 1/8 and q^{N-1} b < epsilon.
  std::uint64_t gap_threshold = 0;
  // Pairs of adjacent bad indices inside the trace that are at least
  // gap_threshold apart, and how many of them obey the 1/4 + epsilon step.
  std::size_t checked_pairs = 0;
  std::size_t violations = 0;
  // First position i from which every later s_{n_i} stays below 4 epsilon.
  std::optional<std::size_t> below_from;
  bool envelope_holds() const { return checked_pairs > 0 && violations == 0; }
  bool eventually_below_4eps() const { return below_from.has_value(); }
};

EnvelopeReport check_envelope(const ContractionRun& run, double epsilon);

// C1 * q^N.  Throws std::invalid_argument for C1 <= 0 or q outside (0, 1).
double decay_envelope(double c1, double q, std::uint64_t n);

}  // namespace cubiclam
