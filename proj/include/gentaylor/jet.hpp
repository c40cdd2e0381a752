#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "gentaylor/errors.hpp"

namespace gt {

/// A point together with the value and the first m derivatives of a scalar
/// function there: values = [y(x), y'(x), ..., y^(m)(x)].
class Jet {
 public:
  Jet(double point, std::vector<double> values) : point_(point), values_(std::move(values)) {
    if (values_.empty()) throw ArgumentError("jet needs at least the value entry");
    if (!std::isfinite(point_)) throw ArgumentError("jet point must be finite");
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (!std::isfinite(values_[k])) {
        throw ArgumentError("jet entry " + std::to_string(k) + " is not finite");
      }
    }
  }

  double point() const { return point_; }
  int order() const { return static_cast<int>(values_.size()) - 1; }

  /// k-th derivative value, k = 0..order().
  double operator[](int k) const {
    if (k < 0 || k > order()) {
      throw ArgumentError("jet has order " + std::to_string(order()) +
                          ", derivative " + std::to_string(k) + " requested");
    }
    return values_[static_cast<std::size_t>(k)];
  }

  const std::vector<double>& values() const { return values_; }

 private:
  double point_;
  std::vector<double> values_;
};

}  // namespace gt
