#include <algorithm>
#include <stdexcept>
#include <string>

#include "cubiclam/quad_gap.hpp"

namespace cubiclam {

namespace {

constexpr unsigned kMaxEnumeratedPeriod = 12;

// Exact sigma_3 period of k/m, m = 3^p - 1, if it equals p.
bool has_exact_period(std::uint64_t k, std::uint64_t m, unsigned p) {
  std::uint64_t x = k;
  for (unsigned j = 1; j < p; ++j) {
    x = (3 * x) % m;
    if (x == k) return false;
  }
  return true;
}

// Open cyclic interval (a, b) on Z/m.
bool in_open_cyclic(std::uint64_t x, std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t len = (b + m - a) % m;
  const std::uint64_t off = (x + m - a) % m;
  return off != 0 && off < len;
}

bool orbit_avoids(std::uint64_t k, std::uint64_t a, std::uint64_t b, std::uint64_t m, unsigned p) {
  std::uint64_t x = k;
  for (unsigned j = 0; j < p; ++j) {
    if (in_open_cyclic(x, a, b, m)) return false;
    x = (3 * x) % m;
  }
  return true;
}

}  // namespace

bool periodic_major_is_quadratic(const Arc& major_hole) {
  const GapBoundary boundary(major_hole);
  if (!boundary.contains(major_hole.start()) || !boundary.contains(major_hole.end())) {
    return false;
  }
  const Angle ia = sigma(3, major_hole.start());
  const Angle ib = sigma(3, major_hole.end());
  if (ia == ib) return false;
  return boundary.is_hole(Arc(ia, ib));
}

std::vector<PQPGHole> pqpg_holes(unsigned max_period, const PQPGOptions& options) {
  if (max_period < 1) throw std::invalid_argument("max_period must be at least 1");
  if (max_period > kMaxEnumeratedPeriod) {
    throw std::invalid_argument("max_period above " + std::to_string(kMaxEnumeratedPeriod) +
                                " is not supported by the pair enumeration");
  }
  std::vector<PQPGHole> out;
  for (unsigned p = 1; p <= max_period; ++p) {
    std::uint64_t m = 1;
    for (unsigned i = 0; i < p; ++i) m *= 3;
    m -= 1;

    std::vector<std::uint64_t> periodic;
    for (std::uint64_t k = 0; k < m; ++k) {
      if (has_exact_period(k, m, p)) periodic.push_back(k);
    }
    const unsigned depth = options.validation_depth ? options.validation_depth : std::max(p, 2u);

    for (std::uint64_t ka : periodic) {
      for (std::uint64_t kb : periodic) {
        if (ka == kb) continue;
        // Major hole length in [1/3, 1/2].
        const std::uint64_t len = (kb + m - ka) % m;
        if (3 * len < m || 2 * len > m) continue;
        if (!orbit_avoids(ka, ka, kb, m, p) || !orbit_avoids(kb, ka, kb, m, p)) continue;

        const auto sm = static_cast<std::int64_t>(m);
        Arc major_hole(Angle(static_cast<std::int64_t>(ka), sm),
                       Angle(static_cast<std::int64_t>(kb), sm));
        if (!periodic_major_is_quadratic(major_hole)) continue;

        Arc hole = dual_hole(major_hole);
        GapSpec spec = major_from_hole(hole);
        if (!verify_two_to_one(grow_gap(spec, depth))) continue;

        out.push_back(PQPGHole{hole, hole_period(hole), spec.major, spec.major_hole});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PQPGHole& l, const PQPGHole& r) {
    return l.hole.start() < r.hole.start();
  });
  return out;
}

}  // namespace cubiclam
