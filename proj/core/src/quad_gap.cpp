#include "cubiclam/quad_gap.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace cubiclam {

namespace {

const Angle kThird(1, 3);
const Angle kTwoThirds(2, 3);
const Angle kHalf(1, 2);

bool is_power_of_three_at_most(BigInt den, unsigned n) {
  unsigned e = 0;
  while (den % 3 == 0) {
    den /= 3;
    ++e;
  }
  return den == 1 && e <= n;
}

struct Partition {
  GapBoundary::Class fixed;
  GapBoundary::Class cofixed;
};

// The collapse class fixed by sigma_3 (tau = 0) and the other class over it
// (tau = 1/2).  The arc from the fixed class to the co-fixed class is the
// 0-symbol region.
Partition fixed_partition(const GapBoundary& boundary) {
  std::optional<GapBoundary::Class> fixed;
  const bool has_zero = boundary.contains(Angle());
  const bool has_half = boundary.contains(kHalf);
  if (has_zero) {
    fixed = boundary.class_of(Angle());
    if (has_half && !fixed->contains(kHalf)) {
      throw std::logic_error("two fixed classes on the gap boundary");
    }
  } else if (has_half) {
    fixed = boundary.class_of(kHalf);
  } else {
    static const std::array<std::pair<Angle, Angle>, 3> swapped = {{
        {Angle(1, 8), Angle(3, 8)}, {Angle(5, 8), Angle(7, 8)}, {Angle(1, 4), Angle(3, 4)}}};
    for (const auto& [p, q] : swapped) {
      if (!boundary.contains(p)) continue;
      auto c = boundary.class_of(p);
      if (c.contains(q)) {
        fixed = c;
        break;
      }
    }
  }
  if (!fixed) throw std::logic_error("gap boundary has no fixed class");

  std::optional<GapBoundary::Class> cofixed;
  for (const Angle& f : {fixed->first, fixed->last}) {
    for (const Angle& p : boundary.boundary_preimages(f)) {
      if (fixed->contains(p)) continue;
      auto c = boundary.class_of(p);
      if (cofixed && !(*cofixed == c)) {
        throw std::logic_error("fixed class has more than one preimage class");
      }
      cofixed = c;
    }
  }
  if (!cofixed) throw std::logic_error("fixed class has no preimage class");
  return {*fixed, *cofixed};
}

unsigned symbol(const Partition& part, const Angle& z) {
  if (part.fixed.contains(z)) return 0;
  if (part.cofixed.contains(z)) return 1;
  return Arc(part.fixed.last, part.cofixed.first).contains(z) ? 0 : 1;
}

// Periodic points k/(3^j - 1) on the boundary: the largest sigma_3-invariant
// subset of the candidates outside the major hole.
void add_periodic_core(const GapBoundary& boundary, unsigned j, std::set<Angle>& out) {
  std::uint64_t m = 1;
  for (unsigned i = 0; i < j; ++i) m *= 3;
  m -= 1;
  std::vector<char> alive(m);
  for (std::uint64_t k = 0; k < m; ++k) {
    alive[k] = !boundary.major_hole().contains(Angle(static_cast<std::int64_t>(k),
                                                     static_cast<std::int64_t>(m)));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t k = 0; k < m; ++k) {
      if (alive[k] && !alive[(3 * k) % m]) {
        alive[k] = 0;
        changed = true;
      }
    }
  }
  for (std::uint64_t k = 0; k < m; ++k) {
    if (alive[k]) out.emplace(static_cast<std::int64_t>(k), static_cast<std::int64_t>(m));
  }
}

// Boundary points with denominator 3^i, i <= n, pulled back from the fixed
// point 0 one level at a time.
void add_pullbacks_of_zero(const GapBoundary& boundary, unsigned n, std::set<Angle>& out) {
  if (!boundary.contains(Angle())) return;
  std::set<Angle> level{Angle()};
  out.insert(Angle());
  for (unsigned i = 1; i <= n; ++i) {
    std::set<Angle> next;
    for (const Angle& y : level) {
      for (Angle& p : boundary.boundary_preimages(y)) next.insert(std::move(p));
    }
    out.insert(next.begin(), next.end());
    level = std::move(next);
  }
}

}  // namespace

GapSpec major_from_critical_tag(const Angle& theta) {
  Angle a = theta + kThird;
  Angle b = theta + kTwoThirds;
  Arc hole(a, b);
  GapSpec spec{GapKind::RegularCritical, theta, std::nullopt, Chord(a, b), hole, true};
  spec.validated = critical_tag_admissible(theta);
  return spec;
}

bool critical_tag_admissible(const Angle& theta) {
  const Angle a = theta + kThird;
  const Angle b = theta + kTwoThirds;
  const Arc hole(a, b);
  for (const Angle& y : orbit(3, theta.times(3))) {
    if (hole.contains(y) || y == a || y == b) return false;
  }
  return true;
}

GapSpec major_from_hole(const Arc& hole) {
  const Angle a = hole.start() + kThird;
  const Angle b = hole.end() + kTwoThirds;
  if (a == b) throw std::invalid_argument("hole dualizes to a degenerate chord");
  const OrbitType ta = orbit_type(3, a);
  const OrbitType tb = orbit_type(3, b);
  if (ta.preperiod != 0 || tb.preperiod != 0) {
    throw std::invalid_argument("shifted hole endpoints " + a.to_string() + ", " +
                                b.to_string() + " are not periodic");
  }
  if (ta.period != tb.period) {
    throw std::invalid_argument("shifted hole endpoints have periods " +
                                std::to_string(ta.period) + " and " + std::to_string(tb.period));
  }
  Arc major_hole(a, b);
  const Angle len = major_hole.length();
  if (len < kThird || kHalf < len) {
    throw std::invalid_argument("major hole length " + len.to_string() +
                                " is outside [1/3, 1/2]");
  }
  return GapSpec{GapKind::Periodic, hole.start(), hole, Chord(a, b), major_hole, true};
}

Arc dual_hole(const Arc& major_hole) {
  return Arc(major_hole.start() - kThird, major_hole.end() - kTwoThirds);
}

bool GapApprox::has_vertex(const Angle& x) const {
  return std::binary_search(vertices.begin(), vertices.end(), x);
}

bool in_depth_universe(const Angle& x, unsigned depth) {
  if (depth == 0) return false;
  const BigInt& den = x.denominator();
  if (is_power_of_three_at_most(den, depth)) return true;
  BigInt m = 1;
  for (unsigned j = 1; j <= depth; ++j) {
    m *= 3;
    if ((m - 1) % den == 0) return true;
  }
  return false;
}

GapApprox grow_gap(const GapSpec& spec, unsigned depth) {
  const GapBoundary boundary(spec.major_hole);
  std::set<Angle> verts;
  for (const Angle& e : {spec.major.a(), spec.major.b()}) {
    if (!boundary.contains(e)) continue;
    for (Angle& y : orbit(3, e)) verts.insert(std::move(y));
  }
  if (depth > 0) {
    add_pullbacks_of_zero(boundary, depth, verts);
    for (unsigned j = 1; j <= depth; ++j) add_periodic_core(boundary, j, verts);
  }

  GapApprox gap{spec, depth, {verts.begin(), verts.end()}, {}};
  std::set<Chord> edges;
  for (const Angle& v : gap.vertices) {
    if (auto r = boundary.right_partner(v); r && verts.count(*r)) edges.emplace(v, *r);
  }
  gap.edges.assign(edges.begin(), edges.end());
  return gap;
}

bool verify_two_to_one(const GapApprox& gap) {
  if (gap.vertices.size() < 4) {
    throw std::invalid_argument("verify_two_to_one needs at least 4 vertices, got " +
                                std::to_string(gap.vertices.size()));
  }
  const GapBoundary boundary(gap.spec.major_hole);
  const Chord& major = gap.spec.major;
  auto expected = [&](const Angle& p) {
    if (in_depth_universe(p, gap.depth)) return true;
    return gap.spec.validated && major.has_endpoint(p);
  };
  if (gap.spec.validated && (!gap.has_vertex(major.a()) || !gap.has_vertex(major.b()))) {
    return false;
  }

  for (const Angle& v : gap.vertices) {
    if (boundary.major_hole().contains(v)) return false;
    if (!gap.has_vertex(sigma(3, v))) return false;

    const auto pre = boundary.boundary_preimages(v);
    std::size_t classes = pre.size();
    for (std::size_t i = 0; i < pre.size(); ++i) {
      for (std::size_t j = i + 1; j < pre.size(); ++j) {
        const auto ri = boundary.right_partner(pre[i]);
        const auto rj = boundary.right_partner(pre[j]);
        if ((ri && *ri == pre[j]) || (rj && *rj == pre[i])) --classes;
      }
    }
    if (classes != 2) return false;
    for (const Angle& p : pre) {
      if (expected(p) && !gap.has_vertex(p)) return false;
    }
  }
  return true;
}

Angle tau(const GapApprox& gap, const Angle& v) {
  if (!gap.has_vertex(v)) {
    throw std::invalid_argument(v.to_string() + " is not a vertex of the gap");
  }
  const GapBoundary boundary(gap.spec.major_hole);
  const Partition part = fixed_partition(boundary);

  const OrbitType type = orbit_type(3, v);
  const auto path = orbit(3, v);
  BigInt head = 0;
  for (std::uint64_t k = 0; k < type.preperiod; ++k) {
    head = (head << 1) + symbol(part, path[k]);
  }
  BigInt block = 0;
  for (std::uint64_t k = 0; k < type.period; ++k) {
    block = (block << 1) + symbol(part, path[type.preperiod + k]);
  }
  const BigInt cycle = (BigInt(1) << type.period) - 1;
  const BigInt den = (BigInt(1) << type.preperiod) * cycle;
  return Angle(head * cycle + block, den);
}

Angle critical_decoration_argument(const GapApprox& gap) {
  if (gap.vertices.empty()) throw std::invalid_argument("empty gap");
  Angle ta = tau(gap, gap.spec.major.a());
  Angle tb = tau(gap, gap.spec.major.b());
  if (ta != tb) {
    throw std::logic_error("major endpoints have different tau values " + ta.to_string() +
                           " and " + tb.to_string());
  }
  return ta;
}

Angle decoration_argument_step(const Angle& alpha) { return sigma(2, alpha); }

std::pair<Angle, Angle> decoration_argument_preimages(const Angle& alpha) {
  return {alpha.branch(2, 0), alpha.branch(2, 1)};
}

KStarVerdict lands_in_kstar(const GapApprox& gap, const Angle& alpha) {
  if (!gap.has_vertex(alpha) && !in_depth_universe(alpha, gap.depth)) {
    return KStarVerdict::Unknown;
  }
  const GapBoundary boundary(gap.spec.major_hole);
  if (!boundary.contains(alpha)) return KStarVerdict::NotInGap;
  for (const Angle& y : orbit(3, alpha)) {
    if (gap.spec.major.has_endpoint(y)) return KStarVerdict::MajorEndpointOrbit;
  }
  return KStarVerdict::InKStar;
}

std::uint64_t hole_period(const Arc& hole) {
  const OrbitType ta = orbit_type(3, hole.start() + kThird);
  const OrbitType tb = orbit_type(3, hole.end() + kTwoThirds);
  if (ta.preperiod != 0 || tb.preperiod != 0 || ta.period != tb.period) {
    throw std::logic_error("malformed hole: shifted endpoint periods disagree");
  }
  return ta.period;
}

}  // namespace cubiclam
