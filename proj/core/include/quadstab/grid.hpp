#pragma once

#include <span>
#include <vector>

namespace quadstab::fixpoint {

/// Finite sample grid standing in for "for all x". Points are distinct,
/// nonzero, sorted and span both signs; there are at least 8 of them. The
/// origin is never a grid point (weights may vanish there), it is tracked by
/// a flag and handled separately by callers.
class GridSpec {
 public:
  /// Grid of the form { +-scale * 2^m : m_min <= m <= m_max }. Every point
  /// and every power-of-two dilate of it is exact in floating representation.
  static GridSpec dyadic(double scale, int m_min, int m_max,
                         bool include_origin = false);

  /// Arbitrary point set; validates the invariants listed above.
  explicit GridSpec(std::vector<double> points, bool include_origin = false);

  std::span<const double> points() const { return points_; }
  bool includes_origin() const { return includes_origin_; }

  bool contains(double x) const;

  /// True when all points share a scale s with |x| = s * 2^m exactly, so
  /// doubling or halving a point never leaves the dyadic family. This is the
  /// closure requirement for on-grid dilation comparisons.
  bool is_dyadic() const;

 private:
  std::vector<double> points_;
  bool includes_origin_ = false;
};

}  // namespace quadstab::fixpoint
