#pragma once

// Independent reference computations for tests.  Nothing here calls the
// library code it is used to check: fractions are plain int64 pairs and
// orbits are found by iterate-and-store.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Frac make(std::int64_t n, std::int64_t d) {
    n %= d;
    if (n < 0) n += d;
    const std::int64_t g = std::gcd(n, d);
    return n == 0 ? Frac{0, 1} : Frac{n / g, d / g};
  }
  friend auto operator<=>(const Frac& a, const Frac& b) {
    return a.num * b.den <=> b.num * a.den;
  }
  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num == b.num && a.den == b.den;
  }
};

inline Frac times(const Frac& x, std::int64_t d) { return Frac::make(x.num * d, x.den); }

inline Frac minus(const Frac& x, const Frac& y) {
  return Frac::make(x.num * y.den - y.num * x.den, x.den * y.den);
}

// x strictly inside the positively oriented arc (a, b).
inline bool in_open_arc(const Frac& x, const Frac& a, const Frac& b) {
  if (x == a) return false;
  return minus(x, a) < minus(b, a);
}

struct OrbitType {
  std::uint64_t preperiod;
  std::uint64_t period;
};

inline OrbitType orbit_type(std::int64_t d, Frac x) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> seen;
  for (std::uint64_t step = 0;; ++step) {
    auto [it, fresh] = seen.emplace(std::pair{x.num, x.den}, step);
    if (!fresh) return {it->second, step - it->second};
    x = times(x, d);
  }
}

inline std::vector<Frac> orbit(std::int64_t d, Frac x) {
  std::vector<Frac> out;
  while (std::find(out.begin(), out.end(), x) == out.end()) {
    out.push_back(x);
    x = times(x, d);
  }
  return out;
}

inline bool orbit_avoids(const Frac& x, const Frac& a, const Frac& b) {
  for (const Frac& y : orbit(3, x)) {
    if (in_open_arc(y, a, b)) return false;
  }
  return true;
}

// Every k/3^n and k/(3^j - 1), n, j <= depth, whose sigma_3 orbit avoids the
// open arc (a, b).
inline std::set<std::pair<std::int64_t, std::int64_t>> brute_force_gap(const Frac& a,
                                                                       const Frac& b,
                                                                       unsigned depth) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  std::int64_t p = 1;
  for (unsigned n = 1; n <= depth; ++n) {
    p *= 3;
    for (std::int64_t m : {p, p - 1}) {
      for (std::int64_t k = 0; k < m; ++k) {
        const Frac x = Frac::make(k, m);
        if (orbit_avoids(x, a, b)) out.emplace(x.num, x.den);
      }
    }
  }
  return out;
}

// All patterns 0 < m1 < ... < mk = n by recursion over the last free entry.
inline void patterns_ending_at(unsigned n, std::vector<std::vector<std::uint64_t>>& out) {
  std::vector<std::uint64_t> cur;
  auto rec = [&](auto&& self, std::uint64_t next) -> void {
    if (next == n) {
      cur.push_back(n);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    self(self, next + 1);
    cur.push_back(next);
    self(self, next + 1);
    cur.pop_back();
  };
  rec(rec, 1);
}

// Smallest s with shift-by-s invariance of the generated value set, found by
// expanding m_{lk+r} = lN + m_r far enough and comparing set shifts.
inline std::uint64_t minimal_shift_period(const std::vector<std::uint64_t>& pattern) {
  const std::uint64_t n = pattern.back();
  const std::uint64_t bound = 6 * n + 6;
  std::set<std::uint64_t> values;
  for (std::uint64_t lap = 0; lap * n <= bound; ++lap) {
    for (std::uint64_t m : pattern) values.insert(lap * n + m);
  }
  for (std::uint64_t s = 1;; ++s) {
    bool ok = true;
    for (std::uint64_t v = 1; v + s <= bound && ok; ++v) {
      ok = values.count(v) == values.count(v + s);
    }
    if (ok) return s;
  }
}

using C = std::complex<double>;

// Newton on (w, b) for f(w) = w, f'(w) = 0 with f = lambda z + b z^2 + z^3.
inline std::pair<C, C> superattracting_parameter(C lambda, C w0, C b0) {
  C w = w0;
  C b = b0;
  for (int it = 0; it < 100; ++it) {
    const C f1 = lambda + b * w + w * w - 1.0;  // (f(w) - w) / w
    const C f2 = lambda + 2.0 * b * w + 3.0 * w * w;
    const C a11 = b + 2.0 * w, a12 = w;
    const C a21 = 2.0 * b + 6.0 * w, a22 = 2.0 * w;
    const C det = a11 * a22 - a12 * a21;
    const C dw = (f1 * a22 - a12 * f2) / det;
    const C db = (a11 * f2 - a21 * f1) / det;
    w -= dw;
    b -= db;
    if (std::abs(dw) + std::abs(db) < 1e-15) break;
  }
  return {w, b};
}

// Newton on f^p(z) = z.
template <class F, class DF>
std::optional<C> periodic_point(F f, DF df, unsigned p, C z0) {
  C z = z0;
  for (int it = 0; it < 200; ++it) {
    C w = z;
    C dw = 1.0;
    for (unsigned k = 0; k < p; ++k) {
      dw *= df(w);
      w = f(w);
    }
    const C step = (w - z) / (dw - 1.0);
    z -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) return z;
  }
  return std::nullopt;
}

// Even-odd test of a point against a closed polygon.
inline bool inside_polygon(const std::vector<C>& poly, C p) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const C a = poly[i], b = poly[j];
    if ((a.imag() > p.imag()) != (b.imag() > p.imag())) {
      const double x = a.real() + (p.imag() - a.imag()) * (b.real() - a.real()) /
                                      (b.imag() - a.imag());
      if (p.real() < x) inside = !inside;
    }
  }
  return inside;
}

}  // namespace oracle
