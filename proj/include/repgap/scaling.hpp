#pragma once

#include <utility>
#include <vector>

#include "repgap/gap_types.hpp"

namespace repgap {

/// Log-log regression result over (n, gap) pairs.
struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double estimated_dim = 0.0;  // -2/slope; valid only when dim_defined
  bool dim_defined = false;
  int points_used = 0;
};

enum class JOptimalKind { exact, approximation, empirical };

struct ZadorConstants {
  int d = 0;
  double J_random = 0.0;
  double J_optimal = 0.0;
  JOptimalKind J_optimal_kind = JOptimalKind::exact;
};

/// Expected nearest-neighbor constant
/// J_d = (1/pi) Gamma(2/d + 1) Gamma(d/2 + 1)^{2/d}.
double j_random(int d);

/// Optimal quantization constant: exact 1/12 (d=1) and 5/(18 sqrt 3) (d=2),
/// large-d approximation d/(2 pi e) otherwise.
std::pair<double, JOptimalKind> j_optimal(int d);

ZadorConstants zador_constants(int d);

/// Density volume functional for a uniform density over a region of the given
/// measure; both the random and optimal functionals collapse to
/// measure^{2/d}.
double volume_functional(double measure, int d, GapMode mode);

/// OLS on (ln n, ln gap). Requires >= 3 points, strictly increasing n,
/// positive gaps. estimated_dim = -2/slope, undefined for slope >= 0.
/// drop_smallest discards that many leading grid points (pre-asymptotic
/// regime); default keeps all.
ScalingFit fit_loglog(const std::vector<std::pair<double, double>>& curve,
                      int drop_smallest = 0);

/// n * (J*_d / J_d)^{d/2}: the optimal-dataset size whose gap matches an
/// i.i.d. dataset of size n.
double effective_sample_size(int d, double n);

/// Theoretical overlay |G| * J * V / n^{2/d} with J, V per mode.
double predicted_gap(int d, double n, double measure, double group_volume, GapMode mode);

}  // namespace repgap
