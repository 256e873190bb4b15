#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "repgap/point_cloud.hpp"

namespace repgap {

enum class ManifoldKind { Hypercube, Hypersphere, Wave, SwissRoll, DeformedSphere, External };

/// Chain of upper half-circles of radius `amplitude` along x (the profile
/// z = w(x), x in [0, bumps*2*amplitude]), translated along y over
/// [0, y_extent]. x is the conditioning coordinate of the supervised task.
struct WaveParams {
  double amplitude = 0.5;
  int bumps = 2;
  double y_extent = 2.0;
  double x_extent() const { return 2.0 * amplitude * bumps; }
};

/// Parametric description of the data manifold.
class ManifoldSpec {
 public:
  static ManifoldSpec hypercube(int intrinsic_dim, double side = 1.0, int ambient_dim = -1);
  static ManifoldSpec hypersphere(int intrinsic_dim, double radius = 1.0, int ambient_dim = -1);
  static ManifoldSpec wave(WaveParams params = {});
  static ManifoldSpec swiss_roll();
  static ManifoldSpec deformed_sphere();
  static ManifoldSpec external(std::shared_ptr<const PointCloud> reference);

  ManifoldKind kind() const { return kind_; }
  int intrinsic_dim() const { return intrinsic_dim_; }
  int ambient_dim() const { return ambient_dim_; }
  double side() const { return side_; }
  double radius() const { return radius_; }
  const WaveParams& wave_params() const { return wave_; }
  const PointCloud& reference() const;

  /// Riemannian measure (length/area/volume) of the manifold; throws for
  /// DeformedSphere and External where no closed form is kept.
  double measure() const;

  std::string describe() const;

 private:
  ManifoldKind kind_ = ManifoldKind::Hypercube;
  int intrinsic_dim_ = 1;
  int ambient_dim_ = 1;
  double side_ = 1.0;
  double radius_ = 1.0;
  WaveParams wave_;
  std::shared_ptr<const PointCloud> external_;
};

/// n i.i.d. points under the uniform surface/volume measure of the manifold.
/// Deterministic given (spec, n, seed). Throws for External kind.
PointCloud sample_uniform(const ManifoldSpec& spec, std::size_t n, std::uint64_t seed);

/// Closest point of the manifold under the ambient Euclidean metric.
/// Non-unique minimizers resolve by a fixed documented convention: candidates
/// are enumerated in a fixed order and the first minimum wins; the sphere
/// center maps to (radius, 0, ..., 0).
std::vector<double> project(const ManifoldSpec& spec, std::span<const double> y);

/// Wave-graph sampler for the conditional task: x uniform on its range
/// (coordinate 0 is the conditioning input), y uniform on [0, y_extent],
/// z = wave_profile(x).
PointCloud sample_conditional_wave(const ManifoldSpec& spec, std::size_t n, std::uint64_t seed);

double wave_profile(const WaveParams& params, double x);

/// Swiss roll construction constants: (t cos t, h, t sin t), t in
/// [1.5*pi, 4.5*pi], h in [0, 10], scaled to unit diameter, sampled uniformly
/// in surface area (t reweighted by arc length).
struct SwissRollGeometry {
  static constexpr double t_min = 4.71238898038468986;   // 1.5*pi
  static constexpr double t_max = 14.13716694115406957;  // 4.5*pi
  static constexpr double height = 10.0;
  static double scale();  // 1 / diameter
};

}  // namespace repgap
