#include "repgap/gap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "repgap/parallel.hpp"
#include "repgap/rng.hpp"

namespace repgap {

PredictionSpace PredictionSpace::discrete(PointCloud points) {
  if (points.empty()) throw std::invalid_argument("PredictionSpace: empty point set");
  PredictionSpace p;
  p.variant_ = Variant::Discrete;
  p.index_ = std::make_shared<NNIndex>(points);
  p.points_ = std::move(points);
  return p;
}

PredictionSpace PredictionSpace::diffusion_endpoints(PointCloud points) {
  PredictionSpace p = discrete(std::move(points));
  p.variant_ = Variant::DiffusionEndpoints;
  return p;
}

PredictionSpace PredictionSpace::orbit_augmented(PointCloud base, GroupSpec group) {
  if (base.empty()) throw std::invalid_argument("PredictionSpace: empty point set");
  PredictionSpace p;
  p.variant_ = Variant::OrbitAugmented;
  p.points_ = std::move(base);
  p.group_ = std::move(group);
  return p;
}

double PredictionSpace::min_sq_dist(std::span<const double> y) const {
  if (variant_ == Variant::OrbitAugmented) {
    double best = orbit_sq_dist(group_, y, points_[0]);
    for (std::size_t i = 1; i < points_.size(); ++i)
      best = std::min(best, orbit_sq_dist(group_, y, points_[i]));
    return best;
  }
  return index_->nearest(y).second;
}

namespace {

GapEstimate summarize(const std::vector<double>& values, GapMetric metric) {
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) {
    const double d = v - mean;
    var += d * d;
  }
  var /= static_cast<double>(values.size());
  GapEstimate est;
  est.value = mean;
  est.std_error = std::sqrt(var / static_cast<double>(values.size()));
  est.n_eval = values.size();
  est.metric = metric;
  return est;
}

double sq_geodesic_sphere(const ManifoldSpec& spec, std::span<const double> a,
                          std::span<const double> b) {
  const double r = spec.radius();
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  const double c = std::clamp(dot / (r * r), -1.0, 1.0);
  const double arc = r * std::acos(c);
  return arc * arc;
}

}  // namespace

GapEstimate gap_against(const PointCloud& eval, const PredictionSpace& pred, GapMetric metric) {
  if (eval.empty()) throw std::invalid_argument("gap: empty evaluation cloud");
  std::vector<double> vals(eval.size());
  parallel_for(eval.size(), [&](std::size_t i) { vals[i] = pred.min_sq_dist(eval[i]); });
  GapMetric m = pred.variant() == PredictionSpace::Variant::OrbitAugmented &&
                        pred.group().kind() != GroupKind::Identity
                    ? GapMetric::quotient
                    : metric;
  GapEstimate est = summarize(vals, m);
  est.n_dataset = pred.points().size();
  return est;
}

GapEstimate gap(const ManifoldSpec& spec, const PredictionSpace& pred, std::size_t n_eval,
                std::uint64_t seed, GapMetric metric) {
  if (n_eval < 1) throw std::invalid_argument("gap: n_eval >= 1 required");
  PointCloud eval = sample_uniform(spec, n_eval, seed);

  if (metric == GapMetric::sq_geodesic) {
    if (spec.kind() != ManifoldKind::Hypersphere)
      throw std::invalid_argument("gap: sq_geodesic is a sphere-only sanity metric");
    if (pred.variant() == PredictionSpace::Variant::OrbitAugmented)
      throw std::invalid_argument("gap: sq_geodesic unsupported for orbit prediction spaces");
    std::vector<double> vals(eval.size());
    parallel_for(eval.size(), [&](std::size_t i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < pred.points().size(); ++j)
        best = std::min(best, sq_geodesic_sphere(spec, eval[i], pred.points()[j]));
      vals[i] = best;
    });
    GapEstimate est = summarize(vals, metric);
    est.n_dataset = pred.points().size();
    est.seed = seed;
    return est;
  }

  GapEstimate est = gap_against(eval, pred, metric);
  est.seed = seed;
  return est;
}

std::vector<CurvePoint> random_gap_curve(const ManifoldSpec& spec, const GroupSpec& group,
                                         const std::vector<std::size_t>& n_values,
                                         const std::vector<std::uint64_t>& seeds,
                                         std::size_t n_eval) {
  if (n_values.empty()) throw std::invalid_argument("random_gap_curve: empty n grid");
  for (std::size_t i = 0; i + 1 < n_values.size(); ++i)
    if (n_values[i + 1] < n_values[i])
      throw std::invalid_argument("random_gap_curve: n_values must be non-decreasing");

  std::vector<CurvePoint> out;
  out.reserve(n_values.size() * seeds.size());
  for (std::uint64_t s : seeds) {
    const PointCloud eval = sample_uniform(spec, n_eval, mix_seed(s, 0xE7A1));
    for (std::size_t n : n_values) {
      const PointCloud d = sample_uniform(spec, n, mix_seed(s, n));
      PredictionSpace pred = group.kind() == GroupKind::Identity
                                 ? PredictionSpace::discrete(d)
                                 : PredictionSpace::orbit_augmented(d, group);
      CurvePoint cp;
      cp.n = n;
      cp.seed = s;
      cp.estimate = gap_against(eval, pred);
      cp.estimate.seed = s;
      cp.estimate.n_dataset = n;
      out.push_back(std::move(cp));
    }
  }
  return out;
}

namespace {

struct WaveEval {
  PointCloud points;       // (x, z) or (x, y, z) rows matching the predictor
  std::vector<double> xs;  // fresh inputs
};

WaveEval sample_wave_eval(const ManifoldSpec& spec, const Predictor& pred, std::size_t n_eval,
                          std::uint64_t seed) {
  if (spec.kind() != ManifoldKind::Wave)
    throw std::invalid_argument("conditional ops: Wave manifold required");
  const auto& w = spec.wave_params();
  const bool full = pred.target_dim() == 2;
  if (pred.target_dim() != 1 && pred.target_dim() != 2)
    throw std::invalid_argument("conditional ops: predictor target_dim must be 1 or 2");
  Rng rng(seed);
  WaveEval ev;
  ev.points = PointCloud(1 + pred.target_dim());
  ev.points.reserve(n_eval);
  ev.xs.reserve(n_eval);
  std::vector<double> p(1 + pred.target_dim());
  for (std::size_t i = 0; i < n_eval; ++i) {
    const double x = rng.uniform(0.0, w.x_extent());
    p[0] = x;
    if (full) {
      p[1] = rng.uniform(0.0, w.y_extent);
      p[2] = wave_profile(w, x);
    } else {
      p[1] = wave_profile(w, x);
    }
    ev.xs.push_back(x);
    ev.points.push_back(p);
  }
  return ev;
}

PointCloud predictor_graph(const Predictor& pred, const ManifoldSpec& spec,
                           std::size_t graph_grid) {
  const auto& w = spec.wave_params();
  PointCloud graph(1 + pred.target_dim());
  graph.reserve(graph_grid);
  std::vector<double> p(1 + pred.target_dim());
  for (std::size_t i = 0; i < graph_grid; ++i) {
    const double x = w.x_extent() * static_cast<double>(i) / static_cast<double>(graph_grid - 1);
    const auto t = pred.predict(x);
    p[0] = x;
    std::copy(t.begin(), t.end(), p.begin() + 1);
    graph.push_back(p);
  }
  return graph;
}

double target_error(const Predictor& pred, const ManifoldSpec& spec,
                    std::span<const double> eval_point) {
  const auto f = pred.predict(eval_point[0]);
  const std::span<const double> truth = eval_point.subspan(1);
  if (!pred.group()) return sq_dist(truth, f);
  // quotient metric on the target space: reuse the full-ambient group with a
  // fixed input coordinate
  std::vector<double> a(eval_point.begin(), eval_point.end());
  std::vector<double> b(eval_point.size());
  b[0] = eval_point[0];
  std::copy(f.begin(), f.end(), b.begin() + 1);
  return orbit_sq_dist(*pred.group(), a, b);
}

}  // namespace

ConditionalGapResult conditional_gap(const ManifoldSpec& wave_spec, const Predictor& pred,
                                     std::size_t n_eval, std::uint64_t seed,
                                     std::size_t graph_grid) {
  if (n_eval < 1) throw std::invalid_argument("conditional_gap: n_eval >= 1 required");
  if (graph_grid < 2) throw std::invalid_argument("conditional_gap: graph_grid >= 2 required");
  if (pred.train_size() == 0) throw std::invalid_argument("conditional_gap: empty training set");

  const WaveEval ev = sample_wave_eval(wave_spec, pred, n_eval, seed);
  const PointCloud graph = predictor_graph(pred, wave_spec, graph_grid);

  std::vector<double> gap_vals(n_eval), gen_vals(n_eval);
  const bool quotient = pred.group().has_value();
  if (!quotient) {
    NNIndex index(graph);
    parallel_for(n_eval, [&](std::size_t i) {
      gap_vals[i] = index.nearest(ev.points[i]).second;
      gen_vals[i] = target_error(pred, wave_spec, ev.points[i]);
    });
  } else {
    parallel_for(n_eval, [&](std::size_t i) {
      const auto y = ev.points[i];
      double best = orbit_sq_dist(*pred.group(), y, graph[0]);
      for (std::size_t j = 1; j < graph.size(); ++j)
        best = std::min(best, orbit_sq_dist(*pred.group(), y, graph[j]));
      gap_vals[i] = best;
      gen_vals[i] = target_error(pred, wave_spec, ev.points[i]);
    });
  }

  ConditionalGapResult out;
  out.gap = summarize(gap_vals, quotient ? GapMetric::quotient : GapMetric::sq_euclidean);
  out.gap.n_dataset = pred.train_size();
  out.gap.seed = seed;
  out.graph_grid = graph_grid;

  double gsum = 0.0;
  for (double v : gen_vals) gsum += v;
  out.gen_error = gsum / static_cast<double>(n_eval);
  double gvar = 0.0, pvar = 0.0;
  for (std::size_t i = 0; i < n_eval; ++i) {
    const double dg = gen_vals[i] - out.gen_error;
    gvar += dg * dg;
    const double dp = (gen_vals[i] - gap_vals[i]) - (out.gen_error - out.gap.value);
    pvar += dp * dp;
  }
  gvar /= static_cast<double>(n_eval);
  pvar /= static_cast<double>(n_eval);
  out.gen_std_error = std::sqrt(gvar / static_cast<double>(n_eval));
  out.paired_std_error = std::sqrt(pvar / static_cast<double>(n_eval));
  return out;
}

double gen_error(const ManifoldSpec& wave_spec, const Predictor& pred, std::size_t n_eval,
                 std::uint64_t seed) {
  if (n_eval < 1) throw std::invalid_argument("gen_error: n_eval >= 1 required");
  const WaveEval ev = sample_wave_eval(wave_spec, pred, n_eval, seed);
  std::vector<double> vals(n_eval);
  parallel_for(n_eval,
               [&](std::size_t i) { vals[i] = target_error(pred, wave_spec, ev.points[i]); });
  double sum = 0.0;
  for (double v : vals) sum += v;
  return sum / static_cast<double>(n_eval);
}

GapEstimate discrete_conditional_gap(const std::map<std::string, PointCloud>& class_datasets,
                                     const std::map<std::string, ManifoldSpec>& class_manifolds,
                                     const GroupSpec& group, std::size_t n_eval,
                                     std::uint64_t seed) {
  if (class_datasets.empty())
    throw std::invalid_argument("discrete_conditional_gap: no classes");
  for (const auto& [name, cloud] : class_datasets)
    if (!class_manifolds.count(name))
      throw std::invalid_argument("discrete_conditional_gap: missing manifold for class " + name);
  if (class_manifolds.size() != class_datasets.size())
    throw std::invalid_argument("discrete_conditional_gap: missing dataset for a class");

  const double weight = 1.0 / static_cast<double>(class_datasets.size());
  GapEstimate out;
  double var_sum = 0.0;
  std::size_t cls = 0;
  for (const auto& [name, cloud] : class_datasets) {
    const ManifoldSpec& spec = class_manifolds.at(name);
    PredictionSpace pred = group.kind() == GroupKind::Identity
                               ? PredictionSpace::discrete(cloud)
                               : PredictionSpace::orbit_augmented(cloud, group);
    const GapEstimate e = gap(spec, pred, n_eval, mix_seed(seed, cls));
    out.value += weight * e.value;
    var_sum += weight * weight * e.std_error * e.std_error;
    out.n_dataset += cloud.size();
    ++cls;
  }
  out.std_error = std::sqrt(var_sum);
  out.n_eval = n_eval;
  out.seed = seed;
  out.metric = group.kind() == GroupKind::Identity ? GapMetric::sq_euclidean : GapMetric::quotient;
  return out;
}

}  // namespace repgap
