#include "repgap/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace repgap {

double j_random(int d) {
  if (d < 1) throw std::invalid_argument("j_random: d >= 1 required");
  const double dd = d;
  return (1.0 / std::numbers::pi) * std::tgamma(2.0 / dd + 1.0) *
         std::pow(std::tgamma(dd / 2.0 + 1.0), 2.0 / dd);
}

std::pair<double, JOptimalKind> j_optimal(int d) {
  if (d < 1) throw std::invalid_argument("j_optimal: d >= 1 required");
  if (d == 1) return {1.0 / 12.0, JOptimalKind::exact};
  if (d == 2) return {5.0 / (18.0 * std::sqrt(3.0)), JOptimalKind::exact};
  return {d / (2.0 * std::numbers::pi * std::numbers::e), JOptimalKind::approximation};
}

ZadorConstants zador_constants(int d) {
  ZadorConstants z;
  z.d = d;
  z.J_random = j_random(d);
  const auto [jo, kind] = j_optimal(d);
  z.J_optimal = jo;
  z.J_optimal_kind = kind;
  return z;
}

double volume_functional(double measure, int d, GapMode) {
  if (d < 1) throw std::invalid_argument("volume_functional: d >= 1 required");
  if (measure <= 0) throw std::invalid_argument("volume_functional: measure > 0 required");
  // uniform density p = 1/measure: both integrals collapse to measure^{2/d}
  return std::pow(measure, 2.0 / d);
}

ScalingFit fit_loglog(const std::vector<std::pair<double, double>>& curve, int drop_smallest) {
  if (drop_smallest < 0) throw std::invalid_argument("fit_loglog: drop_smallest >= 0 required");
  std::vector<std::pair<double, double>> pts(curve.begin() + std::min<std::size_t>(drop_smallest, curve.size()),
                                             curve.end());
  if (pts.size() < 3) throw std::invalid_argument("fit_loglog: at least 3 points required");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].second <= 0.0)
      throw std::invalid_argument("fit_loglog: gaps must be positive (log undefined)");
    if (i > 0 && pts[i].first <= pts[i - 1].first)
      throw std::invalid_argument("fit_loglog: n must be strictly increasing");
  }

  const std::size_t m = pts.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& [n, g] : pts) {
    const double x = std::log(n), y = std::log(g);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double mm = static_cast<double>(m);
  const double cov = sxy - sx * sy / mm;
  const double varx = sxx - sx * sx / mm;
  const double vary = syy - sy * sy / mm;

  ScalingFit fit;
  fit.points_used = static_cast<int>(m);
  fit.slope = cov / varx;
  fit.intercept = (sy - fit.slope * sx) / mm;
  fit.r_squared = vary > 0.0 ? (cov * cov) / (varx * vary) : 1.0;
  if (fit.slope < 0.0) {
    fit.estimated_dim = -2.0 / fit.slope;
    fit.dim_defined = true;
  } else {
    fit.estimated_dim = std::numeric_limits<double>::quiet_NaN();
    fit.dim_defined = false;
  }
  return fit;
}

double effective_sample_size(int d, double n) {
  const ZadorConstants z = zador_constants(d);
  return n * std::pow(z.J_optimal / z.J_random, d / 2.0);
}

double predicted_gap(int d, double n, double measure, double group_volume, GapMode mode) {
  if (n <= 0) throw std::invalid_argument("predicted_gap: n > 0 required");
  const double J = mode == GapMode::optimal ? j_optimal(d).first : j_random(d);
  return group_volume * J * volume_functional(measure, d, mode) / std::pow(n, 2.0 / d);
}

}  // namespace repgap
