#include <gtest/gtest.h>

#include <random>

#include "cubiclam/quad_gap.hpp"
#include "oracles.hpp"

using namespace cubiclam;

namespace {

Angle A(std::int64_t p, std::int64_t q) { return Angle(p, q); }

oracle::Frac frac(const Angle& a) {
  return {a.numerator().convert_to<std::int64_t>(), a.denominator().convert_to<std::int64_t>()};
}

std::set<std::pair<std::int64_t, std::int64_t>> vertex_set(const GapApprox& g) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (const Angle& v : g.vertices) {
    out.emplace(v.numerator().convert_to<std::int64_t>(),
                v.denominator().convert_to<std::int64_t>());
  }
  return out;
}

GapSpec hole_one() { return major_from_hole(Arc(A(1, 6), A(1, 3))); }
GapSpec hole_two() { return major_from_hole(Arc(A(2, 3), A(5, 6))); }

}  // namespace

TEST(MajorFromCriticalTag, Examples) {
  const GapSpec s0 = major_from_critical_tag(Angle());
  EXPECT_EQ(s0.kind, GapKind::RegularCritical);
  EXPECT_EQ(s0.major, Chord(A(1, 3), A(2, 3)));
  EXPECT_EQ(s0.major_hole, Arc(A(1, 3), A(2, 3)));
  EXPECT_TRUE(s0.validated);

  const GapSpec s1 = major_from_critical_tag(A(1, 2));
  EXPECT_EQ(s1.major, Chord(A(5, 6), A(1, 6)));
  EXPECT_EQ(s1.major_hole, Arc(A(5, 6), A(1, 6)));

  EXPECT_EQ(major_from_critical_tag(A(1, 4)).major, Chord(A(7, 12), A(11, 12)));
  EXPECT_TRUE(s0.major.is_critical(3));
}

TEST(MajorFromCriticalTag, FlagsTagsOutsideQ) {
  // 1/5 has critical value 3/5, inside its own major hole (8/15, 13/15).
  EXPECT_TRUE(critical_tag_admissible(Angle()));
  EXPECT_FALSE(critical_tag_admissible(A(1, 5)));
  EXPECT_FALSE(major_from_critical_tag(A(1, 5)).validated);
}

TEST(MajorFromHole, PeriodOneExamples) {
  const GapSpec a = hole_one();
  EXPECT_EQ(a.kind, GapKind::Periodic);
  EXPECT_EQ(a.major, Chord(Angle(), A(1, 2)));
  EXPECT_EQ(a.major_hole, Arc(A(1, 2), Angle()));
  EXPECT_EQ(a.major_hole.length(), A(1, 2));

  const GapSpec b = hole_two();
  EXPECT_EQ(b.major, Chord(Angle(), A(1, 2)));
  EXPECT_EQ(b.major_hole, Arc(Angle(), A(1, 2)));
}

TEST(MajorFromHole, RejectsMalformedHoles) {
  EXPECT_THROW(major_from_hole(Arc(A(1, 7), A(1, 3))), std::invalid_argument);
  EXPECT_THROW(major_from_hole(Arc(A(1, 6), A(2, 3))), std::invalid_argument);
}

TEST(MajorFromHole, DualizationRoundTrip) {
  for (const PQPGHole& h : pqpg_holes(4)) {
    const GapSpec s = major_from_hole(h.hole);
    EXPECT_EQ(dual_hole(s.major_hole), h.hole);
    EXPECT_EQ(s.major_hole, h.dual_major_hole);
    EXPECT_EQ(s.major, h.dual_major);
  }
}

TEST(GrowGap, DepthZeroIsMajorOrbits) {
  const GapApprox g = grow_gap(hole_one(), 0);
  EXPECT_EQ(g.vertices, (std::vector<Angle>{Angle(), A(1, 2)}));
  const GapApprox c = grow_gap(major_from_critical_tag(Angle()), 0);
  EXPECT_EQ(c.vertices, (std::vector<Angle>{Angle(), A(1, 3), A(2, 3)}));
}

TEST(GrowGap, ContainsPeriodTwoOrbitOfOneEighth) {
  const GapApprox g = grow_gap(hole_one(), 2);
  for (const Angle& v : {Angle(), A(1, 8), A(3, 8), A(1, 2)}) EXPECT_TRUE(g.has_vertex(v)) << v;
}

// 0 is sigma_3-fixed and outside (1/3, 2/3), so it is a vertex.
TEST(GrowGap, CriticalTagZeroKeepsZero) {
  for (unsigned depth : {0u, 1u, 3u}) {
    const GapApprox g = grow_gap(major_from_critical_tag(Angle()), depth);
    const bool oracle_keeps =
        oracle::orbit_avoids(oracle::Frac{0, 1}, oracle::Frac{1, 3}, oracle::Frac{2, 3});
    EXPECT_TRUE(oracle_keeps);
    if (depth > 0) EXPECT_TRUE(g.has_vertex(Angle()));
  }
}

TEST(GrowGap, MatchesBruteForceOracle) {
  const std::vector<GapSpec> specs{hole_one(), hole_two(), major_from_critical_tag(Angle())};
  for (const GapSpec& s : specs) {
    const auto a = frac(s.major_hole.start());
    const auto b = frac(s.major_hole.end());
    for (unsigned depth = 1; depth <= 7; ++depth) {
      const GapApprox g = grow_gap(s, depth);
      EXPECT_EQ(vertex_set(g), oracle::brute_force_gap(a, b, depth))
          << "hole " << s.major_hole << " depth " << depth;
    }
  }
}

TEST(GrowGap, VerticesAreForwardInvariantAndAvoidHole) {
  std::mt19937_64 rng(17);
  std::vector<GapSpec> specs{hole_one(), hole_two()};
  for (const PQPGHole& h : pqpg_holes(3)) specs.push_back(major_from_hole(h.hole));
  while (specs.size() < 40) {
    const Angle t(static_cast<std::int64_t>(rng() % 729), 729);
    const GapSpec s = major_from_critical_tag(t);
    if (s.validated) specs.push_back(s);
  }
  for (const GapSpec& s : specs) {
    const GapApprox g = grow_gap(s, 4);
    for (const Angle& v : g.vertices) {
      EXPECT_TRUE(g.has_vertex(sigma(3, v))) << s.major_hole << " " << v;
      for (const Angle& y : orbit(3, v)) EXPECT_FALSE(s.major_hole.contains(y));
    }
    EXPECT_TRUE(std::is_sorted(g.vertices.begin(), g.vertices.end()));
    EXPECT_TRUE(std::binary_search(g.edges.begin(), g.edges.end(), s.major));
  }
}

TEST(VerifyTwoToOne, HoldsOnGrownGaps) {
  EXPECT_TRUE(verify_two_to_one(grow_gap(hole_one(), 4)));
  EXPECT_TRUE(verify_two_to_one(grow_gap(hole_two(), 5)));
  EXPECT_TRUE(verify_two_to_one(grow_gap(major_from_critical_tag(Angle()), 4)));
}

TEST(VerifyTwoToOne, RejectsSmallAndCorruptedSets) {
  GapApprox tiny = grow_gap(hole_one(), 4);
  tiny.vertices = {Angle()};
  EXPECT_THROW(verify_two_to_one(tiny), std::invalid_argument);

  const GapApprox g = grow_gap(hole_one(), 4);
  for (std::size_t drop = 0; drop < g.vertices.size(); ++drop) {
    GapApprox bad = g;
    bad.vertices.erase(bad.vertices.begin() + static_cast<std::ptrdiff_t>(drop));
    EXPECT_FALSE(verify_two_to_one(bad)) << "dropped " << g.vertices[drop];
  }
}

TEST(Tau, FixedMajorAndPeriodTwoExamples) {
  const GapApprox g = grow_gap(hole_one(), 4);
  EXPECT_EQ(tau(g, Angle()), Angle());
  EXPECT_EQ(tau(g, A(1, 2)), Angle());
  EXPECT_EQ(critical_decoration_argument(g), Angle());
  const Angle t8 = tau(g, A(1, 8));
  EXPECT_TRUE(t8 == A(1, 3) || t8 == A(2, 3));
  EXPECT_EQ(tau(g, A(3, 8)), sigma(2, t8));
  EXPECT_THROW(tau(g, A(1, 5)), std::invalid_argument);
}

TEST(Tau, SemiconjugacyAndWeakCyclicOrder) {
  std::vector<GapSpec> specs{hole_one(), hole_two(), major_from_critical_tag(Angle())};
  for (const PQPGHole& h : pqpg_holes(3)) specs.push_back(major_from_hole(h.hole));
  for (const GapSpec& s : specs) {
    const GapApprox g = grow_gap(s, 4);
    std::vector<Angle> t;
    for (const Angle& v : g.vertices) {
      t.push_back(tau(g, v));
      EXPECT_EQ(tau(g, sigma(3, v)), sigma(2, t.back())) << s.major_hole << " " << v;
    }
    // Vertices are sorted, so the tau values must be weakly increasing after
    // a single rotation: count descents.
    int descents = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[(i + 1) % t.size()] < t[i]) ++descents;
    }
    EXPECT_LE(descents, 1) << s.major_hole;
  }
}

TEST(Tau, PeriodicMajorCollapses) {
  for (const PQPGHole& h : pqpg_holes(3)) {
    const GapApprox g = grow_gap(major_from_hole(h.hole), 4);
    const Angle arg = critical_decoration_argument(g);
    Angle x = arg;
    for (std::uint64_t k = 0; k < h.period; ++k) x = sigma(2, x);
    EXPECT_EQ(x, arg) << h.hole;
  }
}

TEST(Tau, CorruptedMajorIsALogicError) {
  GapApprox g = grow_gap(hole_one(), 4);
  g.spec.major = Chord(Angle(), A(1, 8));
  EXPECT_THROW(critical_decoration_argument(g), std::logic_error);
}

TEST(DecorationArgument, StepAndPreimages) {
  EXPECT_EQ(decoration_argument_step(A(1, 3)), A(2, 3));
  EXPECT_EQ(decoration_argument_preimages(Angle()), std::make_pair(Angle(), A(1, 2)));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const Angle a(static_cast<std::int64_t>(rng() % 1000), 1 + static_cast<std::int64_t>(rng() % 999));
    const auto [p, q] = decoration_argument_preimages(a);
    EXPECT_EQ(decoration_argument_step(p), a);
    EXPECT_EQ(decoration_argument_step(q), a);
  }
}

TEST(LandsInKStar, Examples) {
  const GapApprox g = grow_gap(hole_one(), 3);
  EXPECT_EQ(lands_in_kstar(g, Angle()), KStarVerdict::MajorEndpointOrbit);
  EXPECT_EQ(lands_in_kstar(g, A(1, 8)), KStarVerdict::InKStar);
  EXPECT_EQ(lands_in_kstar(g, A(1, 9)), KStarVerdict::MajorEndpointOrbit);
  EXPECT_EQ(lands_in_kstar(g, A(1, 7)), KStarVerdict::Unknown);
  EXPECT_EQ(lands_in_kstar(g, A(3, 4)), KStarVerdict::NotInGap);
}
