#pragma once

#include <optional>
#include <vector>

#include "repgap/groups.hpp"
#include "repgap/point_cloud.hpp"

namespace repgap {

/// Interpolating supervised predictors over a 1d input (predictor(x_i) = t_i
/// exactly on training inputs). Coordinates are full-ambient: a graph point
/// is (x, target...), and an attached group acts on those ambient coordinates
/// (the equivariant predictors canonicalize their stored targets, matching an
/// input-normalization / prediction-shift architecture).
class Predictor {
 public:
  enum class Kind { NearestInput, PiecewiseLinear1D };

  static Predictor nearest_input(std::vector<double> inputs, PointCloud targets,
                                 std::optional<GroupSpec> group = std::nullopt);
  static Predictor piecewise_linear(std::vector<double> inputs, PointCloud targets,
                                    std::optional<GroupSpec> group = std::nullopt);

  Kind kind() const { return kind_; }
  std::size_t target_dim() const { return targets_.dim(); }
  std::size_t train_size() const { return inputs_.size(); }
  const std::optional<GroupSpec>& group() const { return group_; }

  std::vector<double> predict(double x) const;

  /// Lipschitz constant with respect to the squared metric, i.e.
  /// l_Y(f(x), f(x')) <= L * l_X(x, x'): the squared max segment slope for
  /// PiecewiseLinear1D. Nearest-input predictors are discontinuous and report
  /// unknown (nullopt).
  std::optional<double> lipschitz() const { return lipschitz_; }

  double input_min() const { return inputs_.front(); }
  double input_max() const { return inputs_.back(); }
  const std::vector<double>& inputs() const { return inputs_; }
  const PointCloud& targets() const { return targets_; }

 private:
  Kind kind_ = Kind::NearestInput;
  std::vector<double> inputs_;  // sorted
  PointCloud targets_;          // row i = target of inputs_[i]
  std::optional<GroupSpec> group_;
  std::optional<double> lipschitz_;
};

}  // namespace repgap
