#include "cubiclam/angle.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cubiclam {

namespace {

void require_degree(unsigned d) {
  if (d != 2 && d != 3) {
    throw std::invalid_argument("degree must be 2 or 3, got " + std::to_string(d));
  }
}

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

// Multiplicative order of d modulo m, m coprime to d.
std::uint64_t multiplicative_order(unsigned d, const BigInt& m) {
  if (m == 1) return 1;
  if (m <= BigInt(std::numeric_limits<std::uint64_t>::max() >> 2)) {
    // m < 2^62, so r * d stays below 2^64.
    const auto mm = m.convert_to<std::uint64_t>();
    std::uint64_t r = d % mm;
    std::uint64_t k = 1;
    while (r != 1) {
      r = (r * d) % mm;
      ++k;
    }
    return k;
  }
  BigInt r = BigInt(d) % m;
  std::uint64_t k = 1;
  while (r != 1) {
    r = (r * d) % m;
    ++k;
  }
  return k;
}

}  // namespace

Angle::Angle(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("angle denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Angle Angle::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view p = trim(text.substr(0, slash));
  std::string_view q = slash == std::string_view::npos ? std::string_view("1")
                                                       : trim(text.substr(slash + 1));
  if (!is_integer_text(p) || !is_integer_text(q)) {
    throw std::invalid_argument("malformed angle '" + std::string(text) +
                                "', expected p/q");
  }
  BigInt num{std::string(p)};
  BigInt den{std::string(q)};
  if (den == 0) throw std::invalid_argument("malformed angle '" + std::string(text) + "': zero denominator");
  return Angle(std::move(num), std::move(den));
}

double Angle::to_double() const {
  // Scale down huge denominators before converting so the quotient is finite.
  if (den_ < BigInt(1) << 1000) {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }
  const unsigned shift = static_cast<unsigned>(boost::multiprecision::msb(den_)) - 60;
  BigInt n = num_ >> shift;
  BigInt d = den_ >> shift;
  return n.convert_to<double>() / d.convert_to<double>();
}

std::string Angle::to_string() const {
  if (num_ == 0) return "0";
  return num_.str() + "/" + den_.str();
}

Angle Angle::times(unsigned d) const { return Angle(num_ * d, den_); }

Angle Angle::branch(unsigned d, unsigned k) const {
  return Angle(num_ + BigInt(k) * den_, den_ * d);
}

Angle Angle::halved_pow(unsigned k) const { return Angle(num_, den_ << k); }

Angle operator+(const Angle& a, const Angle& b) {
  return Angle(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Angle operator-(const Angle& a, const Angle& b) {
  return Angle(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
  const BigInt l = a.den_ == b.den_ ? a.num_ : BigInt(a.num_ * b.den_);
  const BigInt r = a.den_ == b.den_ ? b.num_ : BigInt(b.num_ * a.den_);
  if (l < r) return std::strong_ordering::less;
  if (r < l) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Angle& a) { return os << a.to_string(); }

Arc::Arc(Angle start, Angle end) : start_(std::move(start)), end_(std::move(end)) {
  if (start_ == end_) {
    throw std::invalid_argument("arc endpoints coincide at " + start_.to_string());
  }
}

bool Arc::contains(const Angle& x) const {
  if (x == start_) return false;
  return (x - start_) < length();
}

std::ostream& operator<<(std::ostream& os, const Arc& a) {
  return os << "(" << a.start() << ", " << a.end() << ")";
}

Chord::Chord(Angle a, Angle b) : a_(std::move(a)), b_(std::move(b)) {
  if (b_ < a_) std::swap(a_, b_);
}

bool Chord::is_critical(unsigned d) const {
  require_degree(d);
  return a_ != b_ && sigma(d, a_) == sigma(d, b_);
}

std::ostream& operator<<(std::ostream& os, const Chord& c) {
  return os << "{" << c.a() << ", " << c.b() << "}";
}

Angle sigma(unsigned d, const Angle& alpha) {
  require_degree(d);
  return alpha.times(d);
}

std::vector<Angle> preimages(unsigned d, const Angle& alpha) {
  require_degree(d);
  std::vector<Angle> out;
  out.reserve(d);
  for (unsigned k = 0; k < d; ++k) out.push_back(alpha.branch(d, k));
  return out;
}

OrbitType orbit_type(unsigned d, const Angle& alpha) {
  require_degree(d);
  BigInt m = alpha.denominator();
  std::uint64_t pre = 0;
  while (m % d == 0) {
    m /= d;
    ++pre;
  }
  return {pre, multiplicative_order(d, m)};
}

std::vector<Angle> orbit(unsigned d, const Angle& alpha) {
  const OrbitType type = orbit_type(d, alpha);
  std::vector<Angle> out;
  out.reserve(type.preperiod + type.period);
  Angle x = alpha;
  for (std::uint64_t i = 0; i < type.preperiod + type.period; ++i) {
    out.push_back(x);
    x = x.times(d);
  }
  return out;
}

bool in_arc(const Arc& arc, const Angle& alpha) { return arc.contains(alpha); }

bool cyclic_order(const Angle& a, const Angle& b, const Angle& c) {
  if (a == b || b == c || a == c) {
    throw std::invalid_argument("cyclic_order needs three distinct angles");
  }
  return Arc(a, c).contains(b);
}

ArcImage arc_image(unsigned d, const Arc& arc) {
  require_degree(d);
  if (arc.length() < Angle(1, static_cast<std::int64_t>(d))) {
    return Arc(arc.start().times(d), arc.end().times(d));
  }
  return FullCircle{};
}

std::vector<Arc> arc_preimage_components(unsigned d, const Arc& arc) {
  require_degree(d);
  const Angle len = arc.length();
  const Angle step(BigInt(len.numerator()), BigInt(len.denominator() * d));
  std::vector<Arc> out;
  out.reserve(d);
  for (unsigned k = 0; k < d; ++k) {
    Angle s = arc.start().branch(d, k);
    Angle e = s + step;
    out.emplace_back(std::move(s), std::move(e));
  }
  return out;
}

}  // namespace cubiclam
