#include "repgap/nnindex.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace repgap {

namespace {
constexpr std::size_t kLeafSize = 16;
// Slack on the hyperplane prune bound: per-dimension summation rounding can
// pull a far point's computed distance a few ulps below the plane bound, and
// the tie-break contract requires visiting subtrees that could hold an
// equal-distance smaller index.
constexpr double kPruneSlack = 1.0 + 1e-12;
}  // namespace

std::pair<std::size_t, double> nearest_linear(const PointCloud& cloud,
                                              std::span<const double> q) {
  if (cloud.empty()) throw std::invalid_argument("nearest_linear: empty cloud");
  if (q.size() != cloud.dim()) throw std::invalid_argument("nearest_linear: dimension mismatch");
  std::size_t best = 0;
  double best_d2 = sq_dist(q, cloud[0]);
  for (std::size_t i = 1; i < cloud.size(); ++i) {
    const double d2 = sq_dist(q, cloud[i]);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  return {best, best_d2};
}

NNIndex::NNIndex(const PointCloud& cloud) : cloud_(cloud) {
  if (cloud_.empty()) throw std::invalid_argument("NNIndex: empty cloud");
  cloud_.validate();
  order_.resize(cloud_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<std::uint32_t>(i);
  nodes_.reserve(2 * cloud_.size() / kLeafSize + 2);
  std::vector<double> mins(cloud_.dim()), maxs(cloud_.dim());
  build(0, cloud_.size(), mins, maxs);
}

std::int32_t NNIndex::build(std::size_t begin, std::size_t end, std::vector<double>& mins,
                            std::vector<double>& maxs) {
  const std::int32_t id = static_cast<std::int32_t>(nodes_.size());
  nodes_.emplace_back();

  const std::size_t dim = cloud_.dim();
  std::fill(mins.begin(), mins.end(), std::numeric_limits<double>::infinity());
  std::fill(maxs.begin(), maxs.end(), -std::numeric_limits<double>::infinity());
  for (std::size_t i = begin; i < end; ++i) {
    const auto p = cloud_[order_[i]];
    for (std::size_t a = 0; a < dim; ++a) {
      mins[a] = std::min(mins[a], p[a]);
      maxs[a] = std::max(maxs[a], p[a]);
    }
  }
  std::size_t axis = 0;
  double width = maxs[0] - mins[0];
  for (std::size_t a = 1; a < dim; ++a) {
    if (maxs[a] - mins[a] > width) {
      width = maxs[a] - mins[a];
      axis = a;
    }
  }

  if (end - begin <= kLeafSize || width == 0.0) {
    nodes_[id].begin = static_cast<std::uint32_t>(begin);
    nodes_[id].end = static_cast<std::uint32_t>(end);
    return id;
  }

  const std::size_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](std::uint32_t a, std::uint32_t b) {
                     return cloud_[a][axis] < cloud_[b][axis];
                   });
  const double split = cloud_[order_[mid]][axis];

  nodes_[id].axis = static_cast<std::int32_t>(axis);
  nodes_[id].split = split;
  const std::int32_t left = build(begin, mid, mins, maxs);
  const std::int32_t right = build(mid, end, mins, maxs);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

void NNIndex::search(std::int32_t node, std::span<const double> q, std::size_t& best_idx,
                     double& best_d2) const {
  const Node& nd = nodes_[node];
  if (nd.leaf()) {
    for (std::uint32_t i = nd.begin; i < nd.end; ++i) {
      const std::size_t idx = order_[i];
      const double d2 = sq_dist(q, cloud_[idx]);
      if (d2 < best_d2 || (d2 == best_d2 && idx < best_idx)) {
        best_d2 = d2;
        best_idx = idx;
      }
    }
    return;
  }
  const double delta = q[nd.axis] - nd.split;
  const std::int32_t near = delta < 0.0 ? nd.left : nd.right;
  const std::int32_t far = delta < 0.0 ? nd.right : nd.left;
  search(near, q, best_idx, best_d2);
  if (delta * delta <= best_d2 * kPruneSlack) search(far, q, best_idx, best_d2);
}

std::pair<std::size_t, double> NNIndex::nearest(std::span<const double> q) const {
  if (q.size() != cloud_.dim()) throw std::invalid_argument("NNIndex::nearest: dimension mismatch");
  for (double v : q)
    if (!std::isfinite(v)) throw std::invalid_argument("NNIndex::nearest: non-finite query");
  std::size_t best_idx = std::numeric_limits<std::size_t>::max();
  double best_d2 = std::numeric_limits<double>::infinity();
  search(0, q, best_idx, best_d2);
  return {best_idx, best_d2};
}

}  // namespace repgap
