#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "repgap/point_cloud.hpp"

namespace repgap {

enum class GroupKind { Identity, AxisTranslation, AxisRotation };

/// Isometric symmetry group acting on the ambient space, with closed-form
/// orbit (quotient) distances. Only kinds with exact quotient distances are
/// built in: the scaling experiments need exactness, not quadrature error.
class GroupSpec {
 public:
  static GroupSpec identity();
  /// Continuous translation modulo `period` along each listed axis (torus
  /// identification, so orbits have constant volume = product of periods).
  static GroupSpec axis_translation(std::vector<int> axes, std::vector<double> periods);
  /// Rotation about the given coordinate axis; the rotation plane is spanned
  /// by the two lowest coordinate indices different from `axis`.
  static GroupSpec axis_rotation(int axis);

  GroupKind kind() const { return kind_; }
  const std::vector<int>& axes() const { return axes_; }
  const std::vector<double>& periods() const { return periods_; }
  int rotation_axis() const { return axes_.empty() ? -1 : axes_[0]; }
  int plane_i() const { return plane_i_; }
  int plane_j() const { return plane_j_; }

  /// d_Omega - d_{Omega/G}: 0 for identity, 1 for a rotation, k for a
  /// translation over k axes.
  int quotient_dim_reduction() const;

  /// Common Riemannian orbit volume |G|; nullopt when it varies across orbits
  /// (rotations: 2*pi*rho), in which case experiments flag the hypothesis
  /// violation in metadata instead of guessing a correction.
  std::optional<double> orbit_volume() const;

  std::string describe() const;

 private:
  GroupKind kind_ = GroupKind::Identity;
  std::vector<int> axes_;
  std::vector<double> periods_;
  int plane_i_ = -1, plane_j_ = -1;
};

/// min over g in G of squared Euclidean distance from y to g(z), in closed
/// form. Translated coordinates drop out entirely (the orbit covers the full
/// period circle); rotations reduce to (rho_y - rho_z)^2 plus the fixed
/// coordinates.
double orbit_sq_dist(const GroupSpec& group, std::span<const double> y,
                     std::span<const double> z);

/// Materialized orbit discretization: K equally spaced rotations or
/// translation offsets per base point. Identity returns the input unchanged.
PointCloud augment(const GroupSpec& group, const PointCloud& cloud, std::size_t K);

/// Deterministic orbit representative: rotation -> the half-plane
/// {plane_i >= 0, plane_j = 0}; translation -> coordinates reduced modulo the
/// period into [0, period). Idempotent.
std::vector<double> canonicalize(const GroupSpec& group, std::span<const double> y);

/// The point of the orbit G(z) closest to y (the argmin of orbit_sq_dist).
std::vector<double> nearest_orbit_point(const GroupSpec& group, std::span<const double> y,
                                        std::span<const double> z);

}  // namespace repgap
