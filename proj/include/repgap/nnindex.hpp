#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "repgap/point_cloud.hpp"

namespace repgap {

/// Exact nearest-neighbor index (kd-tree, median split on the widest axis,
/// leaf size 16). Query results are identical to an exhaustive scan in both
/// index and distance — exactness is this module's defining contract; the
/// partitioning parameters affect speed only. Ties break to the smallest
/// point index. Immutable after construction; concurrent queries are safe.
class NNIndex {
 public:
  explicit NNIndex(const PointCloud& cloud);

  /// (point index, squared distance) of the exact nearest neighbor.
  std::pair<std::size_t, double> nearest(std::span<const double> q) const;

  std::size_t size() const { return cloud_.size(); }
  const PointCloud& cloud() const { return cloud_; }

 private:
  struct Node {
    // leaf: [begin, end) into order_; internal: split axis/value + children
    std::uint32_t begin = 0, end = 0;
    std::int32_t left = -1, right = -1;
    std::int32_t axis = -1;
    double split = 0.0;
    bool leaf() const { return axis < 0; }
  };

  std::int32_t build(std::size_t begin, std::size_t end, std::vector<double>& mins,
                     std::vector<double>& maxs);
  void search(std::int32_t node, std::span<const double> q, std::size_t& best_idx,
              double& best_d2) const;

  PointCloud cloud_;
  std::vector<std::uint32_t> order_;
  std::vector<Node> nodes_;
};

/// Exhaustive scan with the same tie-break; the correctness oracle for
/// NNIndex and the always-available fallback.
std::pair<std::size_t, double> nearest_linear(const PointCloud& cloud,
                                              std::span<const double> q);

}  // namespace repgap
