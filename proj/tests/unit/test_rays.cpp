#include <gtest/gtest.h>

#include <random>

#include "cubiclam/rays.hpp"
#include "oracles.hpp"
#include "wake_fixture.hpp"

using namespace cubiclam;

namespace {

Angle A(std::int64_t p, std::int64_t q) { return Angle(p, q); }

Complex ray_point(const CubicMap& f, const Angle& theta, double t) {
  return trace_dynamic_ray(f, theta, std::max(4.0, 2 * t), t, 30).samples.back().point;
}

PQPGHole period_one_hole() { return pqpg_holes(1).front(); }

}  // namespace

TEST(DynamicRay, CubeRaysAreRadial) {
  const CubicMap cube(0.0, 0.0);
  for (const Angle& theta : {A(1, 4), Angle(), A(1, 3), A(5, 7), A(13, 27)}) {
    const RayPath ray = trace_dynamic_ray(cube, theta, 4.0, 1e-6, 200);
    ASSERT_EQ(ray.samples.size(), 201u);
    EXPECT_EQ(ray.kind, RayKind::Dynamic);
    for (std::size_t j = 0; j < ray.samples.size(); ++j) {
      const RaySample& s = ray.samples[j];
      if (j > 0) EXPECT_LT(s.t, ray.samples[j - 1].t);
      const Complex expect = std::polar(std::exp(s.t), 2 * M_PI * theta.to_double());
      EXPECT_LT(std::abs(s.point - expect), 1e-8) << theta << " t=" << s.t;
      EXPECT_LT(dynamic_ray_residual(cube, theta, s.t, s.point), 1e-10);
    }
  }
}

TEST(DynamicRay, RejectsBadSchedules) {
  const CubicMap cube(0.0, 0.0);
  EXPECT_THROW(trace_dynamic_ray(cube, Angle(), 1.0, 2.0, 10), std::invalid_argument);
  EXPECT_THROW(trace_dynamic_ray(cube, Angle(), 1.0, 0.0, 10), std::invalid_argument);
  EXPECT_THROW(trace_dynamic_ray(cube, Angle(), 2.0, 1.0, 0), std::invalid_argument);
}

TEST(DynamicRay, NaturalityOnRandomAnglesAndPotentials) {
  const CubicMap f(fixture::third_turn(), Complex(0.3, 0.2));
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> logt(std::log(0.01), std::log(1.0));
  for (int i = 0; i < 100; ++i) {
    const Angle theta(static_cast<std::int64_t>(rng() % 1000), 1000 + static_cast<std::int64_t>(rng() % 3));
    const double t = std::exp(logt(rng));
    const Complex z = ray_point(f, theta, t);
    const Complex w = ray_point(f, sigma(3, theta), 3 * t);
    EXPECT_LT(std::abs(f(z) - w), 1e-6) << theta << " t=" << t;
  }
}

TEST(DynamicRay, SamplesHaveSmallResiduals) {
  const CubicMap f(fixture::third_turn(), 0.0);
  const RayPath ray = trace_dynamic_ray(f, A(1, 7), 4.0, 1e-5, 60);
  for (const RaySample& s : ray.samples) {
    EXPECT_LT(dynamic_ray_residual(f, A(1, 7), s.t, s.point), 1e-8);
    EXPECT_NEAR(green_potential(f, s.point, 100000), s.t, 1e-6 * (1 + s.t));
  }
}

// Sector images: the rays bounding (alpha, beta) map onto the rays bounding
// (3 alpha, 3 beta).
TEST(DynamicRay, SectorBoundaryRaysMapToImageSector) {
  const CubicMap f(fixture::third_turn(), Complex(0.3, 0.2));
  for (const auto& [a, b] : {std::pair{A(1, 10), A(3, 10)}, std::pair{A(7, 9), A(1, 18)}}) {
    const Arc arc(a, b);
    ASSERT_LT(arc.length(), A(1, 3));
    const ArcImage img = arc_image(3, arc);
    ASSERT_TRUE(std::holds_alternative<Arc>(img));
    const Arc image = std::get<Arc>(img);
    for (double t : {0.05, 0.3}) {
      EXPECT_LT(std::abs(f(ray_point(f, a, t)) - ray_point(f, image.start(), 3 * t)), 1e-6);
      EXPECT_LT(std::abs(f(ray_point(f, b, t)) - ray_point(f, image.end(), 3 * t)), 1e-6);
    }
  }
}

// An arc cut out by a critical chord {x, x + 1/3} of length 1/3 maps with
// degree one, its complement with degree two: the three pullback components
// of any small arc split 1 + 2 across the chord.
TEST(SectorCount, PreimageComponentsSplitAcrossCriticalChords) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Angle x(static_cast<std::int64_t>(rng() % 997), 997);
    const Arc small(Angle(static_cast<std::int64_t>(rng() % 991), 991),
                    Angle(static_cast<std::int64_t>(rng() % 991), 991) + A(1, 2000));
    const auto comps = arc_preimage_components(3, small);
    ASSERT_EQ(comps.size(), 3u);
    const Arc short_side(x, x + A(1, 3));
    int inside = 0;
    bool straddles = false;
    for (const Arc& c : comps) {
      const bool s = short_side.contains(c.start()) || c.start() == x;
      const bool e = short_side.contains(c.end()) || c.end() == x + A(1, 3);
      if (s != e) straddles = true;
      if (s && e) ++inside;
    }
    if (!straddles) {
      EXPECT_EQ(inside, 1);
    } else {
      // Merging the components straddled by the critical chord leaves one
      // fewer piece.
      EXPECT_LE(inside, 1);
    }
  }
}

TEST(DynamicRay, CubicLandingAtRepellingFixedPoint) {
  const Complex lambda = fixture::third_turn();
  const CubicMap f(lambda, 0.0);
  const RayPath ray = trace_dynamic_ray(f, Angle(), 4.0, 1e-6, 50);
  const Complex end = ray.samples.back().point;
  const auto p = oracle::periodic_point([&](Complex z) { return f(z); },
                                        [&](Complex z) { return f.derivative(z); }, 1, end);
  ASSERT_TRUE(p.has_value());
  EXPECT_LT(std::abs(*p - end), 1e-4);
  EXPECT_GT(std::abs(f.derivative(*p)), 1.0);
  EXPECT_LT(std::abs(*p - std::sqrt(1.0 - lambda)), 1e-12);
}

// Near a repelling p-cycle with multiplier mu the ray approaches its landing
// point like t^(log|mu| / (p log 3)).  The fixed point where 0 and 1/2 land
// has |mu| close to 2.17, so angle 0 is still 1.4e-4 away at t = 1e-6 and is
// checked at t = 1e-8 instead.
TEST(DynamicRay, PeriodicRaysLandOnRepellingCyclesInsideTheWake) {
  const Complex lambda = fixture::third_turn();
  const CubicMap f(lambda, fixture::wake_parameter());
  auto land = [&](const Angle& theta, double t_lo) {
    const unsigned p = static_cast<unsigned>(orbit_type(3, theta).period);
    const Complex end = trace_dynamic_ray(f, theta, 4.0, t_lo, 50).samples.back().point;
    const auto z = oracle::periodic_point([&](Complex w) { return f(w); },
                                          [&](Complex w) { return f.derivative(w); }, p, end);
    EXPECT_TRUE(z.has_value()) << theta;
    Complex mu = 1.0, w = z.value_or(end);
    for (unsigned k = 0; k < p; ++k) {
      mu *= f.derivative(w);
      w = f(w);
    }
    EXPECT_LT(std::abs(w - *z), 1e-12) << theta;
    EXPECT_GT(std::abs(mu), 1.0) << theta;
    EXPECT_LT(std::abs(*z - end), 1e-4) << theta << " t_lo=" << t_lo;
    return *z;
  };
  for (const Angle& theta : {A(1, 4), A(3, 4), A(1, 8), A(3, 8), A(5, 8), A(7, 8), A(1, 13), A(7, 26)}) {
    land(theta, 1e-6);
  }
  const Complex half = land(A(1, 2), 1e-6);
  const Complex zero = land(Angle(), 1e-8);
  EXPECT_LT(std::abs(half - zero), 1e-12);
}

TEST(ParameterRay, FarOutAndInjective) {
  const Complex lambda = fixture::third_turn();
  const std::vector<Angle> angles{Angle(), A(1, 6), A(1, 4), A(1, 3), A(1, 2), A(5, 6)};
  std::vector<Complex> at_one;
  for (const Angle& theta : angles) {
    const RayPath ray = trace_parameter_ray(lambda, theta, 4.0, 1.0, 20);
    EXPECT_EQ(ray.kind, RayKind::Parameter);
    EXPECT_GT(std::abs(ray.samples.front().point), 10.0);
    EXPECT_GT(std::abs(ray.samples.front().point), std::abs(ray.samples.back().point));
    for (const RaySample& s : ray.samples) {
      EXPECT_LT(parameter_ray_residual(lambda, theta, s.t, s.point), 1e-8);
    }
    at_one.push_back(ray.samples.back().point);
  }
  for (std::size_t i = 0; i < at_one.size(); ++i) {
    for (std::size_t j = i + 1; j < at_one.size(); ++j) EXPECT_GT(std::abs(at_one[i] - at_one[j]), 1e-3);
  }
}

TEST(ParameterRay, PeriodOneRaysApproachEachOther) {
  const Complex lambda = fixture::third_turn();
  double prev = 1e9;
  for (double t : {1e-1, 1e-2, 1e-3}) {
    const Complex a = trace_parameter_ray(lambda, A(1, 6), 4.0, t, 10).samples.back().point;
    const Complex b = trace_parameter_ray(lambda, A(1, 3), 4.0, t, 10).samples.back().point;
    EXPECT_LT(std::abs(a - b), prev);
    prev = std::abs(a - b);
  }
}

TEST(Wake, MembershipInsideAndOutside) {
  const Complex lambda = fixture::third_turn();
  const PQPGHole hole = period_one_hole();
  ASSERT_EQ(hole.hole, Arc(A(1, 6), A(1, 3)));
  const Complex inside = fixture::wake_parameter();
  EXPECT_TRUE(wake_membership(lambda, inside, hole, 1e-4));
  EXPECT_FALSE(wake_membership(lambda, inside, hole, 0.0));
  EXPECT_FALSE(wake_membership(lambda, 0.0, hole, 1e-4));
  EXPECT_FALSE(wake_membership(lambda, Complex(0.3, 0.2), hole, 1e-4));
  EXPECT_THROW(wake_membership(lambda, 10.0, hole, 1e-4), std::domain_error);
}

// The wake parameter lies in the region cut out by the two boundary parameter
// rays and the short segment joining their low-potential ends.
TEST(Wake, FixtureLiesBetweenBoundaryRays) {
  const Complex lambda = fixture::third_turn();
  const RayPath r1 = trace_parameter_ray(lambda, A(1, 6), 6.0, 1e-6, 80);
  const RayPath r2 = trace_parameter_ray(lambda, A(1, 3), 6.0, 1e-6, 80);
  std::vector<Complex> poly;
  for (const RaySample& s : r1.samples) poly.push_back(s.point);
  for (auto it = r2.samples.rbegin(); it != r2.samples.rend(); ++it) poly.push_back(it->point);
  EXPECT_TRUE(oracle::inside_polygon(poly, fixture::wake_parameter()));
  EXPECT_FALSE(oracle::inside_polygon(poly, Complex(0.3, 0.2)));
}

TEST(RootOfUnity, Values) {
  EXPECT_LT(std::abs(root_of_unity(A(1, 3)) - std::polar(1.0, 2 * M_PI / 3)), 1e-15);
  EXPECT_LT(std::abs(root_of_unity(Angle()) - 1.0), 1e-15);
}
