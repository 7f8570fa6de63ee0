#pragma once

/**
 * @file thread.hpp
 * @brief Threads (0̄, m1, m2, ...) of pullback chains and the shift eta.
 *
 * A finite thread stores m1 < ... < mk, all >= 1; the empty thread is (0̄).
 * An infinite thread is a finite prefix followed by a block b1 < ... < bk
 * repeated with stride `period`: entries b_r + l * period, l >= 0.  A
 * "pattern" 0 < m1 < ... < mk = N is the block with period N and no prefix,
 * which generates m_{lk+r} = lN + m_r.
 */

#include <cstdint>
#include <optional>
#include <vector>

namespace cubiclam {

class Thread {
 public:
  Thread() = default;
  // Throws std::invalid_argument unless strictly increasing and positive.
  explicit Thread(std::vector<std::uint64_t> entries);

  const std::vector<std::uint64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Thread&, const Thread&) = default;

 private:
  std::vector<std::uint64_t> entries_;
};

class InfiniteThread {
 public:
  InfiniteThread(Thread prefix, std::vector<std::uint64_t> block, std::uint64_t period);

  // Purely periodic thread from a pattern m1 < ... < mk = N.
  static InfiniteThread from_pattern(std::vector<std::uint64_t> pattern);

  const Thread& prefix() const { return prefix_; }
  const std::vector<std::uint64_t>& block() const { return block_; }
  std::uint64_t period() const { return period_; }

  // First `count` entries m1, m2, ...
  std::vector<std::uint64_t> generate(std::size_t count) const;
  bool contains_value(std::uint64_t value) const;

  // Same generated sequence.
  friend bool same_sequence(const InfiniteThread& a, const InfiniteThread& b);

 private:
  Thread prefix_;
  std::vector<std::uint64_t> block_;
  std::uint64_t period_;
};

// (0̄, m1, ..., mk) -> (0̄, m1 - 1, ..., mk - 1); a zero joins the 0̄ head.
Thread eta(const Thread& t);
InfiniteThread eta(const InfiniteThread& t);
InfiniteThread eta_power(InfiniteThread t, std::uint64_t n);

// Minimal n >= 1 with eta^n(t) = t, or nullopt when t is not periodic.
std::optional<std::uint64_t> detect_period(const InfiniteThread& t);

struct PatternInfo {
  std::vector<std::uint64_t> pattern;
  std::uint64_t minimal_period;
};

// All 2^{N-1} patterns ending in N, each with its minimal eta-period.
std::vector<PatternInfo> enumerate_periodic_patterns(unsigned period);

Thread chain_shared_prefix(const Thread& a, const Thread& b);

}  // namespace cubiclam
