#include "cubiclam/thread.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cubiclam {

namespace {

constexpr unsigned kMaxPatternPeriod = 24;

bool strictly_increasing_positive(const std::vector<std::uint64_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) return false;
    if (i > 0 && v[i] <= v[i - 1]) return false;
  }
  return true;
}

}  // namespace

Thread::Thread(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {
  if (!strictly_increasing_positive(entries_)) {
    throw std::invalid_argument("thread entries must be strictly increasing positive integers");
  }
}

InfiniteThread::InfiniteThread(Thread prefix, std::vector<std::uint64_t> block,
                               std::uint64_t period)
    : prefix_(std::move(prefix)), block_(std::move(block)), period_(period) {
  if (block_.empty()) throw std::invalid_argument("infinite thread needs a non-empty block");
  if (!strictly_increasing_positive(block_)) {
    throw std::invalid_argument("thread block must be strictly increasing positive integers");
  }
  if (period_ == 0 || block_.back() - block_.front() >= period_) {
    throw std::invalid_argument("thread block does not fit in one period");
  }
  if (!prefix_.empty() && prefix_.entries().back() >= block_.front()) {
    throw std::invalid_argument("thread prefix overlaps the periodic block");
  }
}

InfiniteThread InfiniteThread::from_pattern(std::vector<std::uint64_t> pattern) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  const std::uint64_t n = pattern.back();
  return InfiniteThread(Thread{}, std::move(pattern), n);
}

std::vector<std::uint64_t> InfiniteThread::generate(std::size_t count) const {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t v : prefix_.entries()) {
    if (out.size() == count) return out;
    out.push_back(v);
  }
  for (std::uint64_t lap = 0; out.size() < count; ++lap) {
    for (std::uint64_t b : block_) {
      if (out.size() == count) break;
      out.push_back(b + lap * period_);
    }
  }
  return out;
}

bool InfiniteThread::contains_value(std::uint64_t value) const {
  const auto& p = prefix_.entries();
  if (std::binary_search(p.begin(), p.end(), value)) return true;
  if (value < block_.front()) return false;
  const std::uint64_t lap = (value - block_.front()) / period_;
  const std::uint64_t r = value - lap * period_;
  return std::binary_search(block_.begin(), block_.end(), r);
}

bool same_sequence(const InfiniteThread& a, const InfiniteThread& b) {
  const std::uint64_t start = std::max(a.block_.front(), b.block_.front());
  const std::uint64_t stride = std::lcm(a.period_, b.period_);
  const std::uint64_t limit = start + 2 * stride;
  for (std::uint64_t v = 1; v <= limit; ++v) {
    if (a.contains_value(v) != b.contains_value(v)) return false;
  }
  return true;
}

Thread eta(const Thread& t) {
  std::vector<std::uint64_t> out;
  out.reserve(t.size());
  for (std::uint64_t m : t.entries()) {
    if (m > 1) out.push_back(m - 1);
  }
  return Thread(std::move(out));
}

InfiniteThread eta(const InfiniteThread& t) {
  std::vector<std::uint64_t> block;
  block.reserve(t.block().size());
  bool absorbed = false;
  for (std::uint64_t b : t.block()) {
    if (b == 1) {
      absorbed = true;
      continue;
    }
    block.push_back(b - 1);
  }
  // The absorbed entry's next lap, 0 + period, closes the block.
  if (absorbed) block.push_back(t.period());
  return InfiniteThread(eta(t.prefix()), std::move(block), t.period());
}

InfiniteThread eta_power(InfiniteThread t, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) t = eta(t);
  return t;
}

std::optional<std::uint64_t> detect_period(const InfiniteThread& t) {
  const std::uint64_t p = t.period();
  const std::uint64_t window = t.block().front() + p;
  std::vector<char> ind(window + p + 1);
  for (std::uint64_t v = 1; v < ind.size(); ++v) ind[v] = t.contains_value(v);

  for (std::uint64_t d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::uint64_t s = 1; s <= window && ok; ++s) ok = ind[s] == ind[s + d];
    if (ok) return d;
  }
  return std::nullopt;
}

std::vector<PatternInfo> enumerate_periodic_patterns(unsigned period) {
  if (period < 1) throw std::invalid_argument("period must be at least 1");
  if (period > kMaxPatternPeriod) {
    throw std::invalid_argument("period above " + std::to_string(kMaxPatternPeriod) +
                                " is not supported");
  }
  const std::uint64_t count = std::uint64_t{1} << (period - 1);
  std::vector<PatternInfo> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<std::uint64_t> pattern;
    for (unsigned i = 1; i < period; ++i) {
      if (mask & (std::uint64_t{1} << (i - 1))) pattern.push_back(i);
    }
    pattern.push_back(period);
    const auto d = detect_period(InfiniteThread::from_pattern(pattern));
    out.push_back({std::move(pattern), *d});
  }
  return out;
}

Thread chain_shared_prefix(const Thread& a, const Thread& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  const auto [ix, iy] = std::mismatch(x.begin(), x.end(), y.begin(), y.end());
  (void)iy;
  return Thread(std::vector<std::uint64_t>(x.begin(), ix));
}

}  // namespace cubiclam
