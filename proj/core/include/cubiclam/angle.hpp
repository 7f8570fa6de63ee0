#pragma once

/**
 * @file angle.hpp
 * @brief Exact rational points of the circle R/Z and the maps x -> d*x mod 1.
 *
 * Every Angle is a reduced fraction p/q with 0 <= p < q, so equality is
 * structural.  Denominators grow like 3^n along preimage chains, hence the
 * arbitrary-precision integers.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubiclam {

using BigInt = boost::multiprecision::cpp_int;

class Angle {
 public:
  Angle() : num_(0), den_(1) {}

  // Any integer pair with den != 0; the value is reduced modulo 1.
  Angle(BigInt num, BigInt den);
  Angle(std::int64_t num, std::int64_t den) : Angle(BigInt(num), BigInt(den)) {}

  // Parses "p/q" or an integer "p".  Throws std::invalid_argument.
  static Angle parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  // Lossy; only for drawing and numerics at the edge of the exact layer.
  double to_double() const;
  std::string to_string() const;

  // (d * this) mod 1.
  Angle times(unsigned d) const;
  // (this + k) / d, the k-th d-th root branch, for 0 <= k < d.
  Angle branch(unsigned d, unsigned k) const;
  // this / 2^k without wrapping; used for exact lengths.
  Angle halved_pow(unsigned k) const;

  friend Angle operator+(const Angle& a, const Angle& b);
  friend Angle operator-(const Angle& a, const Angle& b);

  friend bool operator==(const Angle& a, const Angle& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  // Order of representatives in [0, 1).
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);

 private:
  struct Reduced {};
  Angle(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Angle& a);

// Positively oriented open arc from start to end.  Never empty, never the
// full circle.
class Arc {
 public:
  Arc(Angle start, Angle end);

  const Angle& start() const { return start_; }
  const Angle& end() const { return end_; }
  // (end - start) mod 1, in (0, 1).
  Angle length() const { return end_ - start_; }
  // Strict interior membership.
  bool contains(const Angle& x) const;

  friend bool operator==(const Arc&, const Arc&) = default;

 private:
  Angle start_;
  Angle end_;
};

std::ostream& operator<<(std::ostream& os, const Arc& a);

struct FullCircle {
  friend bool operator==(FullCircle, FullCircle) { return true; }
};
using ArcImage = std::variant<Arc, FullCircle>;

// Unordered pair of circle points, stored with a <= b.
class Chord {
 public:
  Chord(Angle a, Angle b);

  const Angle& a() const { return a_; }
  const Angle& b() const { return b_; }
  bool is_critical(unsigned d) const;
  bool has_endpoint(const Angle& x) const { return x == a_ || x == b_; }

  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord& l, const Chord& r) {
    if (auto c = l.a_ <=> r.a_; c != 0) return c;
    return l.b_ <=> r.b_;
  }

 private:
  Angle a_;
  Angle b_;
};

std::ostream& operator<<(std::ostream& os, const Chord& c);

struct OrbitType {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
  friend bool operator==(const OrbitType&, const OrbitType&) = default;
};

// sigma_d(x) = d*x mod 1 for d in {2, 3}.
Angle sigma(unsigned d, const Angle& alpha);

// The d preimages of alpha, in increasing order on [0, 1).
std::vector<Angle> preimages(unsigned d, const Angle& alpha);

// Smallest (p, n) with sigma_d^{p+n}(alpha) = sigma_d^p(alpha), computed from
// the factorisation of the denominator.
OrbitType orbit_type(unsigned d, const Angle& alpha);

// The orbit alpha, sigma(alpha), ... up to and including the first repeat's
// predecessor; size() == preperiod + period.
std::vector<Angle> orbit(unsigned d, const Angle& alpha);

bool in_arc(const Arc& arc, const Angle& alpha);

// True iff b lies strictly inside the positive arc from a to c.  Rejects
// coincident arguments with std::invalid_argument.
bool cyclic_order(const Angle& a, const Angle& b, const Angle& c);

// sigma_d image of an arc: an Arc when length < 1/d, else FullCircle.
ArcImage arc_image(unsigned d, const Arc& arc);

// The d disjoint arcs {(arc + i) / d}, ordered by start.
std::vector<Arc> arc_preimage_components(unsigned d, const Arc& arc);

}  // namespace cubiclam
