#pragma once

#include <algorithm>
#include <cmath>

#include "gentaylor/errors.hpp"

namespace gt {

/// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double lo, double hi) : lo(lo), hi(hi) {
    if (!(std::isfinite(lo) && std::isfinite(hi)) || lo > hi) {
      throw ArgumentError("invalid interval endpoints");
    }
  }

  /// Smallest interval containing both points, in either order.
  static Interval hull(double a, double b) {
    return Interval(std::min(a, b), std::max(a, b));
  }

  double length() const { return hi - lo; }

  bool contains(double x, double slack = 0.0) const {
    return x >= lo - slack && x <= hi + slack;
  }

  bool contains(const Interval& other) const {
    return other.lo >= lo && other.hi <= hi;
  }

  double clamp(double x) const { return std::clamp(x, lo, hi); }
};

}  // namespace gt
