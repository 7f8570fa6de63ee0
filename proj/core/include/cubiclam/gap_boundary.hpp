#pragma once

#include <optional>
#include <vector>

#include "cubiclam/angle.hpp"

namespace cubiclam {

// Exact description of the boundary set of the sigma_3-invariant gap cut out
// by a major hole I: the points whose forward orbit never enters I.  Every
// other hole of that set is a one-to-one pullback of I, so hole endpoints are
// recognised by their orbits reaching an endpoint of I.
class GapBoundary {
 public:
  explicit GapBoundary(Arc major_hole);

  const Arc& major_hole() const { return hole_; }

  bool contains(const Angle& x) const;

  // For x on the boundary: the other endpoint of the hole adjacent to x on
  // the given side, if x is a hole endpoint on that side.
  std::optional<Angle> right_partner(const Angle& x) const;
  std::optional<Angle> left_partner(const Angle& x) const;

  // The collapse class of x under tau, as the (first, last) points in
  // positive order: a hole's endpoints, or {x, x} for an isolated class.
  struct Class {
    Angle first;
    Angle last;
    bool is_edge() const { return first != last; }
    bool contains(const Angle& x) const { return x == first || x == last; }
    friend bool operator==(const Class&, const Class&) = default;
  };
  Class class_of(const Angle& x) const;

  // Preimages of y that lie in the closed complement of the major hole.
  // For y on the boundary these are exactly its boundary preimages.
  std::vector<Angle> boundary_preimages(const Angle& y) const;

  // True iff the arc is one of the complementary arcs of the boundary set.
  bool is_hole(const Arc& arc) const;

 private:
  Arc hole_;
  Angle hole_length_;
};

}  // namespace cubiclam
