#include "cubiclam/gap_boundary.hpp"

#include <stdexcept>

namespace cubiclam {

namespace {

// |I| / 3^k as an exact length; |I| <= 1/2 so no wrap occurs.
Angle shrink(const Angle& len, std::size_t k) {
  BigInt den = len.denominator();
  for (std::size_t i = 0; i < k; ++i) den *= 3;
  return Angle(len.numerator(), den);
}

}  // namespace

GapBoundary::GapBoundary(Arc major_hole)
    : hole_(std::move(major_hole)), hole_length_(hole_.length()) {}

bool GapBoundary::contains(const Angle& x) const {
  for (const Angle& y : orbit(3, x)) {
    if (hole_.contains(y)) return false;
  }
  return true;
}

std::optional<Angle> GapBoundary::right_partner(const Angle& x) const {
  const auto path = orbit(3, x);
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k] == hole_.start()) return x + shrink(hole_length_, k);
  }
  return std::nullopt;
}

std::optional<Angle> GapBoundary::left_partner(const Angle& x) const {
  const auto path = orbit(3, x);
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k] == hole_.end()) return x - shrink(hole_length_, k);
  }
  return std::nullopt;
}

GapBoundary::Class GapBoundary::class_of(const Angle& x) const {
  if (auto r = right_partner(x)) return {x, *r};
  if (auto l = left_partner(x)) return {*l, x};
  return {x, x};
}

std::vector<Angle> GapBoundary::boundary_preimages(const Angle& y) const {
  std::vector<Angle> out;
  for (Angle& p : preimages(3, y)) {
    if (!hole_.contains(p)) out.push_back(std::move(p));
  }
  return out;
}

bool GapBoundary::is_hole(const Arc& arc) const {
  if (!contains(arc.start()) || !contains(arc.end())) return false;
  const auto r = right_partner(arc.start());
  return r && *r == arc.end();
}

}  // namespace cubiclam
