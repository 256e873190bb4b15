#include "repgap/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "repgap/nnindex.hpp"
#include "repgap/parallel.hpp"
#include "repgap/rng.hpp"

namespace repgap {

namespace {

// Fixed chunking keeps parallel reductions bit-reproducible across machines.
constexpr std::size_t kChunk = 8192;

struct Assignment {
  std::vector<std::uint32_t> cell;
  std::vector<double> d2;
  double mean_error = 0.0;
};

Assignment assign(const PointCloud& reference, const PointCloud& centroids,
                  const GroupSpec* group) {
  Assignment out;
  const std::size_t n = reference.size();
  out.cell.resize(n);
  out.d2.resize(n);
  if (!group || group->kind() == GroupKind::Identity) {
    NNIndex index(centroids);
    parallel_for(n, [&](std::size_t i) {
      auto [idx, d2] = index.nearest(reference[i]);
      out.cell[i] = static_cast<std::uint32_t>(idx);
      out.d2[i] = d2;
    });
  } else {
    parallel_for(n, [&](std::size_t i) {
      const auto y = reference[i];
      std::size_t best = 0;
      double bd = orbit_sq_dist(*group, y, centroids[0]);
      for (std::size_t j = 1; j < centroids.size(); ++j) {
        const double d = orbit_sq_dist(*group, y, centroids[j]);
        if (d < bd) {
          bd = d;
          best = j;
        }
      }
      out.cell[i] = static_cast<std::uint32_t>(best);
      out.d2[i] = bd;
    });
  }
  double sum = 0.0;
  for (double v : out.d2) sum += v;
  out.mean_error = sum / static_cast<double>(n);
  return out;
}

}  // namespace

PointCloud kmeanspp_init(const PointCloud& sample, std::size_t n, std::uint64_t seed,
                         const GroupSpec* group) {
  if (n < 1) throw std::invalid_argument("kmeanspp_init: n >= 1 required");
  if (n > sample.size())
    throw std::invalid_argument("kmeanspp_init: n exceeds the sample size");

  Rng rng(seed);
  const std::size_t m = sample.size();
  auto dist = [&](std::span<const double> a, std::span<const double> b) {
    return group && group->kind() != GroupKind::Identity ? orbit_sq_dist(*group, a, b)
                                                         : sq_dist(a, b);
  };

  std::vector<double> w(m, std::numeric_limits<double>::infinity());
  std::vector<char> chosen(m, 0);
  PointCloud out(sample.dim());
  out.reserve(n);

  std::size_t first = rng.uniform_index(m);
  out.push_back(sample[first]);
  chosen[first] = 1;
  for (std::size_t i = 0; i < m; ++i) w[i] = dist(sample[i], sample[first]);

  for (std::size_t k = 1; k < n; ++k) {
    double total = 0.0;
    for (double v : w) total += v;
    std::size_t pick = m;
    if (total > 0.0) {
      const double u = rng.uniform() * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        acc += w[i];
        if (u < acc) {
          pick = i;
          break;
        }
      }
      if (pick == m) {  // u landed on the accumulated rounding tail
        pick = m - 1;
        while (pick > 0 && w[pick] == 0.0) --pick;
      }
    } else {
      // all remaining points coincide with chosen ones: take the first unchosen
      for (std::size_t i = 0; i < m; ++i)
        if (!chosen[i]) {
          pick = i;
          break;
        }
      if (pick == m) throw std::logic_error("kmeanspp_init: exhausted sample");
    }
    out.push_back(sample[pick]);
    chosen[pick] = 1;
    for (std::size_t i = 0; i < m; ++i) w[i] = std::min(w[i], dist(sample[i], sample[pick]));
  }
  return out;
}

QuantizerResult lloyd(const ManifoldSpec& spec, PointCloud init, const PointCloud& reference,
                      int max_iter, double tol, const GroupSpec* group) {
  if (init.empty()) throw std::invalid_argument("lloyd: empty initialization");
  if (reference.empty()) throw std::invalid_argument("lloyd: empty reference sample");
  if (init.dim() != reference.dim()) throw std::invalid_argument("lloyd: dimension mismatch");

  QuantizerResult result;
  result.centroids = std::move(init);
  const std::size_t k = result.centroids.size();
  const std::size_t dim = result.centroids.dim();
  const std::size_t nref = reference.size();
  const std::size_t nchunks = (nref + kChunk - 1) / kChunk;

  double prev_error = std::numeric_limits<double>::infinity();
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    Assignment a = assign(reference, result.centroids, group);
    result.error_history.push_back(a.mean_error);

    if (prev_error < std::numeric_limits<double>::infinity()) {
      const double rel = prev_error > 0.0 ? (prev_error - a.mean_error) / prev_error
                                          : std::abs(a.mean_error - prev_error);
      if (rel < tol) {
        result.converged = true;
        result.quantization_error = a.mean_error;
        result.iterations = iter;
        return result;
      }
    }
    prev_error = a.mean_error;

    // cell means, accumulated per fixed-size chunk and reduced in chunk order
    std::vector<std::vector<double>> sums(nchunks, std::vector<double>(k * dim, 0.0));
    std::vector<std::vector<std::uint32_t>> counts(nchunks, std::vector<std::uint32_t>(k, 0));
    parallel_for(nchunks, [&](std::size_t c) {
      const std::size_t lo = c * kChunk, hi = std::min(nref, lo + kChunk);
      auto& s = sums[c];
      auto& cnt = counts[c];
      for (std::size_t i = lo; i < hi; ++i) {
        const auto p = reference[i];
        const std::size_t cell = a.cell[i];
        for (std::size_t d = 0; d < dim; ++d) s[cell * dim + d] += p[d];
        ++cnt[cell];
      }
    });
    std::vector<double> sum(k * dim, 0.0);
    std::vector<std::uint64_t> count(k, 0);
    for (std::size_t c = 0; c < nchunks; ++c) {
      for (std::size_t j = 0; j < k * dim; ++j) sum[j] += sums[c][j];
      for (std::size_t j = 0; j < k; ++j) count[j] += counts[c][j];
    }

    // farthest reference points re-seed empty cells, largest distance first
    std::vector<std::size_t> empties;
    for (std::size_t j = 0; j < k; ++j)
      if (count[j] == 0) empties.push_back(j);
    std::vector<std::size_t> reseed;
    if (!empties.empty()) {
      std::vector<std::size_t> order(nref);
      std::iota(order.begin(), order.end(), 0);
      std::partial_sort(order.begin(), order.begin() + empties.size(), order.end(),
                        [&](std::size_t x, std::size_t y) {
                          if (a.d2[x] != a.d2[y]) return a.d2[x] > a.d2[y];
                          return x < y;
                        });
      reseed.assign(order.begin(), order.begin() + empties.size());
    }

    std::vector<double> c(dim);
    for (std::size_t j = 0; j < k; ++j) {
      if (count[j] == 0) {
        const std::size_t which = static_cast<std::size_t>(
            std::find(empties.begin(), empties.end(), j) - empties.begin());
        const auto p = reference[reseed[which]];
        std::copy(p.begin(), p.end(), c.begin());
      } else {
        for (std::size_t d = 0; d < dim; ++d) c[d] = sum[j * dim + d] / count[j];
      }
      std::vector<double> snapped;
      if (group && group->kind() != GroupKind::Identity) {
        snapped = project(spec, canonicalize(*group, c));
      } else {
        snapped = project(spec, c);
      }
      std::copy(snapped.begin(), snapped.end(), result.centroids.row(j).begin());
    }
  }

  Assignment fin = assign(reference, result.centroids, group);
  result.error_history.push_back(fin.mean_error);
  result.quantization_error = fin.mean_error;
  result.iterations = iter;
  result.converged = false;
  return result;
}

GapEstimate optimal_gap_with_reference(const ManifoldSpec& spec, const GroupSpec& group,
                                       std::size_t n, std::uint64_t seed, int restarts,
                                       const PointCloud& reference,
                                       const OptimalGapConfig& config) {
  if (n < 1) throw std::invalid_argument("optimal_gap: n >= 1 required");
  if (restarts < 1) throw std::invalid_argument("optimal_gap: restarts >= 1 required");
  const GroupSpec* g = group.kind() == GroupKind::Identity ? nullptr : &group;

  double best = std::numeric_limits<double>::infinity();
  QuantizerResult best_result;
  for (int r = 0; r < restarts; ++r) {
    PointCloud init = kmeanspp_init(reference, n, mix_seed(seed, 1000 + r), g);
    QuantizerResult qr = lloyd(spec, std::move(init), reference, config.max_iter, config.tol, g);
    if (qr.quantization_error < best) {
      best = qr.quantization_error;
      best_result = std::move(qr);
    }
  }

  // std error of the winning run's Monte Carlo integral over the reference
  Assignment a = assign(reference, best_result.centroids, g);
  double var = 0.0;
  for (double v : a.d2) {
    const double d = v - a.mean_error;
    var += d * d;
  }
  var /= static_cast<double>(reference.size());

  GapEstimate est;
  est.value = best;
  est.std_error = std::sqrt(var / static_cast<double>(reference.size()));
  est.n_dataset = n;
  est.n_eval = reference.size();
  est.seed = seed;
  est.mode = GapMode::optimal;
  est.metric = g ? GapMetric::quotient : GapMetric::sq_euclidean;
  return est;
}

GapEstimate optimal_gap(const ManifoldSpec& spec, const GroupSpec& group, std::size_t n,
                        std::uint64_t seed, int restarts, const OptimalGapConfig& config) {
  PointCloud reference = sample_uniform(spec, config.reference_size, mix_seed(seed, 0x5EF));
  return optimal_gap_with_reference(spec, group, n, seed, restarts, reference, config);
}

}  // namespace repgap
