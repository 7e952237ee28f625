#pragma once

#include <span>
#include <vector>

namespace moser {

/// Per-coordinate weights w_i >= 0 defining the scaling action
/// kappa_t(x) = (t^{w_1} x_1, ..., t^{w_n} x_n).  Weight-0 axes span the
/// submanifold N = { p : p_i = 0 for all i with w_i >= 1 }; positive weights
/// mark normal directions and their homogeneity degree.
class WeightSequence {
 public:
  explicit WeightSequence(std::vector<int> w);  // n >= 1, all >= 0, one >= 1

  int dim() const { return static_cast<int>(w_.size()); }
  int weight(int axis) const { return w_[axis]; }
  std::span<const int> values() const { return w_; }
  int max_weight() const;

  std::vector<int> normal_axes() const;  // w_i >= 1
  std::vector<int> base_axes() const;    // w_i == 0

  void kappa(double t, std::span<const double> in, std::span<double> out) const;

  /// sup-norm distance to N over the weight-positive axes.
  double normal_distance(std::span<const double> p) const;

 private:
  std::vector<int> w_;
};

}  // namespace moser
