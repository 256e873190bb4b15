#include "repgap/predictors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace repgap {

namespace {

Predictor build(Predictor::Kind kind, std::vector<double> inputs, PointCloud targets,
                std::optional<GroupSpec> group);

}  // namespace

Predictor Predictor::nearest_input(std::vector<double> inputs, PointCloud targets,
                                   std::optional<GroupSpec> group) {
  return build(Kind::NearestInput, std::move(inputs), std::move(targets), std::move(group));
}

Predictor Predictor::piecewise_linear(std::vector<double> inputs, PointCloud targets,
                                      std::optional<GroupSpec> group) {
  return build(Kind::PiecewiseLinear1D, std::move(inputs), std::move(targets), std::move(group));
}

namespace {

Predictor build(Predictor::Kind kind, std::vector<double> inputs, PointCloud targets,
                std::optional<GroupSpec> group) {
  if (inputs.empty()) throw std::invalid_argument("Predictor: empty training set");
  if (inputs.size() != targets.size())
    throw std::invalid_argument("Predictor: inputs/targets size mismatch");
  if (group) {
    for (int a : group->axes())
      if (a == 0)
        throw std::invalid_argument("Predictor: the group may not act on the input coordinate");
    if (group->kind() == GroupKind::AxisRotation)
      throw std::invalid_argument("Predictor: rotation groups unsupported for predictors");
  }

  std::vector<std::size_t> order(inputs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return inputs[a] < inputs[b]; });

  Predictor p;
  p.kind_ = kind;
  p.group_ = std::move(group);
  p.inputs_.reserve(inputs.size());
  p.targets_ = PointCloud(targets.dim());
  p.targets_.reserve(inputs.size());
  std::vector<double> full(1 + targets.dim());
  for (std::size_t i : order) {
    if (!p.inputs_.empty() && inputs[i] == p.inputs_.back())
      throw std::invalid_argument("Predictor: duplicate training input");
    p.inputs_.push_back(inputs[i]);
    if (p.group_) {
      full[0] = inputs[i];
      const auto t = targets[i];
      std::copy(t.begin(), t.end(), full.begin() + 1);
      const auto canon = canonicalize(*p.group_, full);
      p.targets_.push_back(std::span<const double>(canon).subspan(1));
    } else {
      p.targets_.push_back(targets[i]);
    }
  }

  if (kind == Predictor::Kind::PiecewiseLinear1D) {
    double max_slope2 = 0.0;
    for (std::size_t i = 0; i + 1 < p.inputs_.size(); ++i) {
      const double dx = p.inputs_[i + 1] - p.inputs_[i];
      const double dt2 = sq_dist(p.targets_[i + 1], p.targets_[i]);
      max_slope2 = std::max(max_slope2, dt2 / (dx * dx));
    }
    p.lipschitz_ = max_slope2;
  }
  return p;
}

}  // namespace

std::vector<double> Predictor::predict(double x) const {
  const auto it = std::lower_bound(inputs_.begin(), inputs_.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - inputs_.begin());

  if (kind_ == Kind::NearestInput) {
    std::size_t pick;
    if (hi == 0)
      pick = 0;
    else if (hi == inputs_.size())
      pick = inputs_.size() - 1;
    else
      pick = (x - inputs_[hi - 1] <= inputs_[hi] - x) ? hi - 1 : hi;
    const auto t = targets_[pick];
    return {t.begin(), t.end()};
  }

  // piecewise linear with constant extrapolation outside the training range
  if (hi == 0) {
    const auto t = targets_[0];
    return {t.begin(), t.end()};
  }
  if (hi == inputs_.size()) {
    const auto t = targets_[inputs_.size() - 1];
    return {t.begin(), t.end()};
  }
  const double x0 = inputs_[hi - 1], x1 = inputs_[hi];
  const double w = (x - x0) / (x1 - x0);
  const auto a = targets_[hi - 1];
  const auto b = targets_[hi];
  std::vector<double> out(targets_.dim());
  for (std::size_t d = 0; d < out.size(); ++d) out[d] = (1.0 - w) * a[d] + w * b[d];
  return out;
}

}  // namespace repgap
