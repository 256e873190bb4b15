#pragma once

#include <cstdint>
#include <string>

namespace repgap {

enum class GapMode { iid, optimal };
enum class GapMetric { sq_euclidean, sq_geodesic, quotient };

/// Monte Carlo estimate of the representation gap R(Omega, Omega_f).
struct GapEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t n_dataset = 0;
  std::size_t n_eval = 0;
  std::uint64_t seed = 0;
  GapMode mode = GapMode::iid;
  GapMetric metric = GapMetric::sq_euclidean;
};

inline std::string to_string(GapMode m) { return m == GapMode::iid ? "iid" : "optimal"; }
inline std::string to_string(GapMetric m) {
  switch (m) {
    case GapMetric::sq_euclidean: return "sq_euclidean";
    case GapMetric::sq_geodesic: return "sq_geodesic";
    case GapMetric::quotient: return "quotient";
  }
  return "?";
}

}  // namespace repgap
