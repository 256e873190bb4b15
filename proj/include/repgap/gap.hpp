#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "repgap/gap_types.hpp"
#include "repgap/groups.hpp"
#include "repgap/manifolds.hpp"
#include "repgap/nnindex.hpp"
#include "repgap/point_cloud.hpp"
#include "repgap/predictors.hpp"

namespace repgap {

/// The set of points a model can produce. Discrete variants are backed by an
/// exact NN index; OrbitAugmented always uses the closed-form orbit distance,
/// never a discretized orbit.
class PredictionSpace {
 public:
  enum class Variant { Discrete, OrbitAugmented, DiffusionEndpoints };

  static PredictionSpace discrete(PointCloud points);
  static PredictionSpace orbit_augmented(PointCloud base, GroupSpec group);
  static PredictionSpace diffusion_endpoints(PointCloud points);

  Variant variant() const { return variant_; }
  const PointCloud& points() const { return points_; }
  const GroupSpec& group() const { return group_; }

  double min_sq_dist(std::span<const double> y) const;

 private:
  Variant variant_ = Variant::Discrete;
  PointCloud points_;
  GroupSpec group_;
  std::shared_ptr<const NNIndex> index_;
};

/// Monte Carlo estimate of Eq.-1 style gap: mean squared distance from fresh
/// uniform samples of the manifold to the nearest prediction point.
/// std_error = sample std / sqrt(n_eval). sq_geodesic is available for
/// sphere-only sanity checks (great-circle distance to Discrete points).
GapEstimate gap(const ManifoldSpec& spec, const PredictionSpace& pred, std::size_t n_eval,
                std::uint64_t seed, GapMetric metric = GapMetric::sq_euclidean);

/// Same estimator against a caller-provided evaluation cloud.
GapEstimate gap_against(const PointCloud& eval, const PredictionSpace& pred,
                        GapMetric metric = GapMetric::sq_euclidean);

struct CurvePoint {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  GapEstimate estimate;
};

/// For each (n, seed): sample D i.i.d. from the manifold, form the prediction
/// space per the group (Discrete for identity, OrbitAugmented otherwise),
/// estimate the gap. Evaluation clouds are shared per seed across the n grid
/// (one hold-out set per seed); all derived seeds come from mix_seed, so the
/// grid is deterministic and duplicated (n, seed) cells are identical.
std::vector<CurvePoint> random_gap_curve(const ManifoldSpec& spec, const GroupSpec& group,
                                         const std::vector<std::size_t>& n_values,
                                         const std::vector<std::uint64_t>& seeds,
                                         std::size_t n_eval);

struct ConditionalGapResult {
  GapEstimate gap;
  double gen_error = 0.0;
  double gen_std_error = 0.0;
  /// std error of (gen - gap) under the paired estimator
  double paired_std_error = 0.0;
  std::size_t graph_grid = 0;
};

/// Conditional representation gap on the Wave task: fresh inputs x with their
/// true targets, minimum over the predictor graph evaluated on a dense input
/// grid. Predictors with target_dim 1 interpolate the profile z = w(x) (eval
/// points (x, z)); target_dim 2 interpolates (y, z) with eval points
/// (x, y, z). A group on the predictor makes both the gap and the
/// generalization error quotient distances. gen_error is computed on the same
/// eval sample (paired estimator).
ConditionalGapResult conditional_gap(const ManifoldSpec& wave_spec, const Predictor& pred,
                                     std::size_t n_eval, std::uint64_t seed,
                                     std::size_t graph_grid = 10000);

/// E = mean target-space error l_Y(y(x), f(x)) on fresh inputs.
double gen_error(const ManifoldSpec& wave_spec, const Predictor& pred, std::size_t n_eval,
                 std::uint64_t seed);

/// Sum over classes of per-class gap, uniform class weights.
GapEstimate discrete_conditional_gap(const std::map<std::string, PointCloud>& class_datasets,
                                     const std::map<std::string, ManifoldSpec>& class_manifolds,
                                     const GroupSpec& group, std::size_t n_eval,
                                     std::uint64_t seed);

}  // namespace repgap
