#pragma once

/**
 * @file quad_gap.hpp
 * @brief Quadratic sigma_3-invariant gaps, their semiconjugacy to sigma_2,
 *        and the holes of the principal quadratic parameter gap.
 *
 * A gap is pinned down by its major and the oriented major hole I.  Its
 * boundary is the set of angles whose sigma_3-orbit never enters I; a
 * GapApprox holds the part of that set visible at a finite depth:
 *
 *   depth n >= 1 : all k/3^n and all k/(3^j - 1), j <= n, on the boundary,
 *   every depth  : the major endpoints and their forward orbits.
 *
 * Depth 0 is the base case (major endpoints and their orbits only).
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "cubiclam/angle.hpp"
#include "cubiclam/gap_boundary.hpp"

namespace cubiclam {

enum class GapKind { RegularCritical, Periodic };

struct GapSpec {
  GapKind kind;
  // RegularCritical: the tag theta.  Periodic: the parameter hole start.
  Angle tag;
  // Periodic only: the parameter hole (theta1, theta2).
  std::optional<Arc> parameter_hole;
  Chord major;
  Arc major_hole;
  // False when the critical-value orbit enters the major hole, i.e. the tag
  // is not a point of Q.  Periodic specs are always validated on creation.
  bool validated = true;
};

// (theta + 1/3)(theta + 2/3) with major hole (theta + 1/3, theta + 2/3).
// Total: admissibility is reported through GapSpec::validated.
GapSpec major_from_critical_tag(const Angle& theta);

// (theta1 + 1/3)(theta2 + 2/3) with major hole (theta1 + 1/3, theta2 + 2/3).
// Throws std::invalid_argument when the shifted endpoints are not periodic of
// equal period or the major hole length leaves [1/3, 1/2].
GapSpec major_from_hole(const Arc& hole);

// Inverse of major_from_hole: (a - 1/3, b - 2/3) for major hole (a, b).
Arc dual_hole(const Arc& major_hole);

// True iff sigma_3^n(3*theta) avoids (theta + 1/3, theta + 2/3) for all n.
bool critical_tag_admissible(const Angle& theta);

struct GapApprox {
  GapSpec spec;
  unsigned depth = 0;
  std::vector<Angle> vertices;  // sorted, unique
  std::vector<Chord> edges;     // sorted; chords across holes, major included

  bool has_vertex(const Angle& x) const;
};

// Angles visited at a depth: every k/3^n and k/(3^j - 1) for j <= n.
bool in_depth_universe(const Angle& x, unsigned depth);

GapApprox grow_gap(const GapSpec& spec, unsigned depth);

// Finite check of the two-to-one boundary dynamics.  Throws
// std::invalid_argument for fewer than four vertices.
bool verify_two_to_one(const GapApprox& gap);

// The monotone semiconjugacy onto the doubling circle.  Throws
// std::invalid_argument if v is not a vertex of gap.
Angle tau(const GapApprox& gap, const Angle& v);

// tau of the major; throws std::logic_error if its endpoints disagree.
Angle critical_decoration_argument(const GapApprox& gap);

Angle decoration_argument_step(const Angle& alpha);
std::pair<Angle, Angle> decoration_argument_preimages(const Angle& alpha);

enum class KStarVerdict { InKStar, MajorEndpointOrbit, NotInGap, Unknown };

KStarVerdict lands_in_kstar(const GapApprox& gap, const Angle& alpha);

struct PQPGHole {
  Arc hole;
  std::uint64_t period;
  Chord dual_major;
  Arc dual_major_hole;
};

// Period of theta1 + 1/3; throws std::logic_error if theta2 + 2/3 disagrees.
std::uint64_t hole_period(const Arc& hole);
inline std::uint64_t hole_period(const PQPGHole& h) { return hole_period(h.hole); }

struct PQPGOptions {
  // Depth of the grown gap used to confirm two-to-one dynamics; 0 selects
  // max(period, 2).
  unsigned validation_depth = 0;
};

// All holes of the principal quadratic parameter gap with period <= max_period,
// sorted by hole start.
std::vector<PQPGHole> pqpg_holes(unsigned max_period, const PQPGOptions& options = {});

// Quadratic test for a candidate periodic major: the image of the major must
// bound a hole of the boundary set.
bool periodic_major_is_quadratic(const Arc& major_hole);

}  // namespace cubiclam
