#include "quadstab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quadstab::fixpoint {

GridSpec GridSpec::dyadic(double scale, int m_min, int m_max, bool include_origin) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("GridSpec: scale must be positive and finite");
  }
  if (m_min > m_max) {
    throw std::invalid_argument("GridSpec: m_min must not exceed m_max");
  }
  std::vector<double> pts;
  pts.reserve(2 * static_cast<std::size_t>(m_max - m_min + 1));
  for (int m = m_min; m <= m_max; ++m) {
    const double v = std::ldexp(scale, m);
    pts.push_back(-v);
    pts.push_back(v);
  }
  return GridSpec(std::move(pts), include_origin);
}

GridSpec::GridSpec(std::vector<double> points, bool include_origin)
    : points_(std::move(points)), includes_origin_(include_origin) {
  std::sort(points_.begin(), points_.end());
  if (points_.size() < 8) {
    throw std::invalid_argument("GridSpec: needs at least 8 points");
  }
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw std::invalid_argument("GridSpec: points must be distinct");
  }
  for (double x : points_) {
    if (x == 0.0 || !std::isfinite(x)) {
      throw std::invalid_argument("GridSpec: points must be nonzero and finite");
    }
  }
  if (points_.front() >= 0.0 || points_.back() <= 0.0) {
    throw std::invalid_argument("GridSpec: points must span both signs");
  }
}

bool GridSpec::contains(double x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

bool GridSpec::is_dyadic() const {
  // Common scale: smallest magnitude present. Every |x| must then be that
  // scale times an exact power of two, i.e. share its mantissa.
  double scale = 0.0;
  for (double x : points_) {
    const double a = std::abs(x);
    if (scale == 0.0 || a < scale) scale = a;
  }
  int se = 0;
  const double sm = std::frexp(scale, &se);
  for (double x : points_) {
    int e = 0;
    if (std::frexp(std::abs(x), &e) != sm) return false;
  }
  return true;
}

}  // namespace quadstab::fixpoint
