#include "repgap/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace repgap {

namespace {
constexpr double kPi = std::numbers::pi;

void check_same_dim(std::span<const double> y, std::span<const double> z) {
  if (y.size() != z.size()) throw std::invalid_argument("group op: dimension mismatch");
}

void check_axis_in_range(int axis, std::size_t dim, const char* what) {
  if (axis < 0 || static_cast<std::size_t>(axis) >= dim)
    throw std::invalid_argument(std::string(what) + ": axis out of range for this dimension");
}

}  // namespace

GroupSpec GroupSpec::identity() { return {}; }

GroupSpec GroupSpec::axis_translation(std::vector<int> axes, std::vector<double> periods) {
  if (axes.empty() || axes.size() != periods.size())
    throw std::invalid_argument("axis_translation: axes/periods must be non-empty and match");
  for (double p : periods)
    if (p <= 0) throw std::invalid_argument("axis_translation: periods must be positive");
  for (std::size_t i = 0; i < axes.size(); ++i)
    for (std::size_t j = i + 1; j < axes.size(); ++j)
      if (axes[i] == axes[j]) throw std::invalid_argument("axis_translation: duplicate axis");
  GroupSpec g;
  g.kind_ = GroupKind::AxisTranslation;
  g.axes_ = std::move(axes);
  g.periods_ = std::move(periods);
  return g;
}

GroupSpec GroupSpec::axis_rotation(int axis) {
  if (axis < 0) throw std::invalid_argument("axis_rotation: axis must be >= 0");
  GroupSpec g;
  g.kind_ = GroupKind::AxisRotation;
  g.axes_ = {axis};
  int i = 0;
  while (i == axis) ++i;
  int j = i + 1;
  while (j == axis) ++j;
  g.plane_i_ = i;
  g.plane_j_ = j;
  return g;
}

int GroupSpec::quotient_dim_reduction() const {
  switch (kind_) {
    case GroupKind::Identity: return 0;
    case GroupKind::AxisRotation: return 1;
    case GroupKind::AxisTranslation: return static_cast<int>(axes_.size());
  }
  return 0;
}

std::optional<double> GroupSpec::orbit_volume() const {
  switch (kind_) {
    case GroupKind::Identity: return 1.0;
    case GroupKind::AxisTranslation: {
      double v = 1.0;
      for (double p : periods_) v *= p;
      return v;
    }
    case GroupKind::AxisRotation: return std::nullopt;  // 2*pi*rho, orbit-dependent
  }
  return std::nullopt;
}

std::string GroupSpec::describe() const {
  switch (kind_) {
    case GroupKind::Identity: return "identity";
    case GroupKind::AxisTranslation: return "translation";
    case GroupKind::AxisRotation: return "rotation";
  }
  return "?";
}

double orbit_sq_dist(const GroupSpec& group, std::span<const double> y,
                     std::span<const double> z) {
  check_same_dim(y, z);
  switch (group.kind()) {
    case GroupKind::Identity:
      return sq_dist(y, z);
    case GroupKind::AxisRotation: {
      const int i = group.plane_i(), j = group.plane_j();
      check_axis_in_range(j, y.size(), "orbit_sq_dist(rotation)");
      const double ry = std::hypot(y[i], y[j]);
      const double rz = std::hypot(z[i], z[j]);
      double s = (ry - rz) * (ry - rz);
      for (std::size_t k = 0; k < y.size(); ++k) {
        if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
        const double d = y[k] - z[k];
        s += d * d;
      }
      return s;
    }
    case GroupKind::AxisTranslation: {
      double s = 0.0;
      for (std::size_t k = 0; k < y.size(); ++k) {
        bool translated = false;
        for (int a : group.axes())
          if (static_cast<int>(k) == a) {
            check_axis_in_range(a, y.size(), "orbit_sq_dist(translation)");
            translated = true;
            break;
          }
        if (translated) continue;  // orbit covers the full period circle
        const double d = y[k] - z[k];
        s += d * d;
      }
      return s;
    }
  }
  throw std::logic_error("orbit_sq_dist: unreachable");
}

PointCloud augment(const GroupSpec& group, const PointCloud& cloud, std::size_t K) {
  if (K == 0) throw std::invalid_argument("augment: K >= 1 required");
  switch (group.kind()) {
    case GroupKind::Identity:
      return cloud;
    case GroupKind::AxisRotation: {
      const int i = group.plane_i(), j = group.plane_j();
      if (cloud.size() > 0) check_axis_in_range(j, cloud.dim(), "augment(rotation)");
      PointCloud out(cloud.dim());
      out.reserve(cloud.size() * K);
      std::vector<double> p(cloud.dim());
      for (std::size_t m = 0; m < cloud.size(); ++m) {
        const auto base = cloud[m];
        for (std::size_t k = 0; k < K; ++k) {
          const double ang = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(K);
          const double c = std::cos(ang), s = std::sin(ang);
          std::copy(base.begin(), base.end(), p.begin());
          p[i] = c * base[i] - s * base[j];
          p[j] = s * base[i] + c * base[j];
          out.push_back(p);
        }
      }
      return out;
    }
    case GroupKind::AxisTranslation: {
      if (group.axes().size() != 1)
        throw std::invalid_argument("augment: multi-axis translation orbits are not materialized");
      const int a = group.axes()[0];
      const double period = group.periods()[0];
      if (cloud.size() > 0) check_axis_in_range(a, cloud.dim(), "augment(translation)");
      PointCloud out(cloud.dim());
      out.reserve(cloud.size() * K);
      std::vector<double> p(cloud.dim());
      for (std::size_t m = 0; m < cloud.size(); ++m) {
        const auto base = cloud[m];
        for (std::size_t k = 0; k < K; ++k) {
          std::copy(base.begin(), base.end(), p.begin());
          // offsets wrap into the centered period window [-p/2, p/2)
          double v = base[a] + period * static_cast<double>(k) / static_cast<double>(K);
          v -= period * std::floor(v / period + 0.5);
          p[a] = v;
          out.push_back(p);
        }
      }
      return out;
    }
  }
  throw std::logic_error("augment: unreachable");
}

std::vector<double> canonicalize(const GroupSpec& group, std::span<const double> y) {
  std::vector<double> out(y.begin(), y.end());
  switch (group.kind()) {
    case GroupKind::Identity:
      return out;
    case GroupKind::AxisRotation: {
      const int i = group.plane_i(), j = group.plane_j();
      check_axis_in_range(j, y.size(), "canonicalize(rotation)");
      const double rho = std::hypot(y[i], y[j]);
      out[i] = rho;  // rho = 0 is an axis fixed point, returned unchanged
      out[j] = 0.0;
      return out;
    }
    case GroupKind::AxisTranslation: {
      for (std::size_t k = 0; k < group.axes().size(); ++k) {
        const int a = group.axes()[k];
        check_axis_in_range(a, y.size(), "canonicalize(translation)");
        const double p = group.periods()[k];
        out[a] = out[a] - p * std::floor(out[a] / p);
        if (out[a] >= p) out[a] = 0.0;  // guard fmod edge at exact period
      }
      return out;
    }
  }
  throw std::logic_error("canonicalize: unreachable");
}

std::vector<double> nearest_orbit_point(const GroupSpec& group, std::span<const double> y,
                                        std::span<const double> z) {
  check_same_dim(y, z);
  std::vector<double> out(z.begin(), z.end());
  switch (group.kind()) {
    case GroupKind::Identity:
      return out;
    case GroupKind::AxisRotation: {
      const int i = group.plane_i(), j = group.plane_j();
      check_axis_in_range(j, y.size(), "nearest_orbit_point(rotation)");
      const double ry = std::hypot(y[i], y[j]);
      const double rz = std::hypot(z[i], z[j]);
      if (ry == 0.0) {
        out[i] = rz;
        out[j] = 0.0;
      } else {
        out[i] = rz * y[i] / ry;
        out[j] = rz * y[j] / ry;
      }
      return out;
    }
    case GroupKind::AxisTranslation: {
      for (int a : group.axes()) {
        check_axis_in_range(a, y.size(), "nearest_orbit_point(translation)");
        out[a] = y[a];
      }
      return out;
    }
  }
  throw std::logic_error("nearest_orbit_point: unreachable");
}

}  // namespace repgap
