#pragma once

#include <functional>
#include <string>
#include <utility>

#include "gentaylor/jet.hpp"

namespace gt {

/// A scalar function that can report exact jets of any requested order.
/// The oracle contract: jet(x, m) returns [f(x), f'(x), ..., f^(m)(x)], and
/// the order-m jet is a prefix of the order-(m+1) jet at the same point.
class SmoothFunction {
 public:
  using JetOracle = std::function<Jet(double x, int order)>;

  SmoothFunction(JetOracle oracle, std::string label)
      : oracle_(std::move(oracle)), label_(std::move(label)) {
    if (!oracle_) throw ArgumentError("smooth function needs a jet oracle");
  }

  Jet jet(double x, int order) const {
    Jet j = oracle_(x, order);
    if (j.order() < order) {
      throw ArgumentError("jet oracle for '" + label_ + "' returned order " +
                          std::to_string(j.order()) + ", need " + std::to_string(order));
    }
    return j;
  }

  double value(double x) const { return jet(x, 0)[0]; }
  double derivative(double x, int k) const { return jet(x, k)[k]; }

  const std::string& label() const { return label_; }

 private:
  JetOracle oracle_;
  std::string label_;
};

}  // namespace gt
