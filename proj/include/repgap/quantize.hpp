#pragma once

#include <cstdint>
#include <vector>

#include "repgap/gap_types.hpp"
#include "repgap/groups.hpp"
#include "repgap/manifolds.hpp"
#include "repgap/point_cloud.hpp"

namespace repgap {

struct QuantizerResult {
  PointCloud centroids;
  double quantization_error = 0.0;
  int iterations = 0;
  bool converged = false;
  /// Error of the centroids entering each iteration, plus the final error;
  /// non-increasing for exact projectors (Lloyd monotonicity).
  std::vector<double> error_history;
};

struct OptimalGapConfig {
  std::size_t reference_size = 100000;
  int max_iter = 200;
  double tol = 1e-6;
};

/// n distinct points chosen from `sample` by D^2 weighting (k-means++).
/// Deterministic given seed. D^2 uses the quotient distance when a group is
/// supplied.
PointCloud kmeanspp_init(const PointCloud& sample, std::size_t n, std::uint64_t seed,
                         const GroupSpec* group = nullptr);

/// Discrete Lloyd iterations against a dense reference sample of the
/// manifold: assign reference points to the nearest centroid, recompute cell
/// means, snap means back onto the manifold via project(). Empty cells
/// re-seed at the reference point farthest from all centroids. Stops when the
/// relative error decrease falls below tol or max_iter is reached. With a
/// group, assignment uses orbit_sq_dist and snapping canonicalizes first.
QuantizerResult lloyd(const ManifoldSpec& spec, PointCloud init, const PointCloud& reference,
                      int max_iter, double tol, const GroupSpec* group = nullptr);

/// Best quantization error over `restarts` k-means++/Lloyd runs; the optimal
/// representation gap estimate R_n*.
GapEstimate optimal_gap(const ManifoldSpec& spec, const GroupSpec& group, std::size_t n,
                        std::uint64_t seed, int restarts, const OptimalGapConfig& config = {});

/// Same, but reusing a caller-provided reference sample.
GapEstimate optimal_gap_with_reference(const ManifoldSpec& spec, const GroupSpec& group,
                                       std::size_t n, std::uint64_t seed, int restarts,
                                       const PointCloud& reference,
                                       const OptimalGapConfig& config = {});

}  // namespace repgap
