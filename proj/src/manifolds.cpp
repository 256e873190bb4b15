#include "repgap/manifolds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "repgap/rng.hpp"

namespace repgap {

namespace {
constexpr double kPi = std::numbers::pi;
}

ManifoldSpec ManifoldSpec::hypercube(int intrinsic_dim, double side, int ambient_dim) {
  if (intrinsic_dim < 1) throw std::invalid_argument("hypercube: intrinsic_dim >= 1 required");
  if (side <= 0) throw std::invalid_argument("hypercube: side > 0 required");
  if (ambient_dim < 0) ambient_dim = intrinsic_dim;
  if (ambient_dim < intrinsic_dim)
    throw std::invalid_argument("hypercube: intrinsic_dim <= ambient_dim required");
  ManifoldSpec s;
  s.kind_ = ManifoldKind::Hypercube;
  s.intrinsic_dim_ = intrinsic_dim;
  s.ambient_dim_ = ambient_dim;
  s.side_ = side;
  return s;
}

ManifoldSpec ManifoldSpec::hypersphere(int intrinsic_dim, double radius, int ambient_dim) {
  if (intrinsic_dim < 1) throw std::invalid_argument("hypersphere: intrinsic_dim >= 1 required");
  if (radius <= 0) throw std::invalid_argument("hypersphere: radius > 0 required");
  if (ambient_dim < 0) ambient_dim = intrinsic_dim + 1;
  if (ambient_dim < intrinsic_dim + 1)
    throw std::invalid_argument("hypersphere: ambient_dim >= intrinsic_dim + 1 required");
  ManifoldSpec s;
  s.kind_ = ManifoldKind::Hypersphere;
  s.intrinsic_dim_ = intrinsic_dim;
  s.ambient_dim_ = ambient_dim;
  s.radius_ = radius;
  return s;
}

ManifoldSpec ManifoldSpec::wave(WaveParams params) {
  if (params.amplitude <= 0 || params.bumps < 1 || params.y_extent <= 0)
    throw std::invalid_argument("wave: invalid parameters");
  ManifoldSpec s;
  s.kind_ = ManifoldKind::Wave;
  s.intrinsic_dim_ = 2;
  s.ambient_dim_ = 3;
  s.wave_ = params;
  return s;
}

ManifoldSpec ManifoldSpec::swiss_roll() {
  ManifoldSpec s;
  s.kind_ = ManifoldKind::SwissRoll;
  s.intrinsic_dim_ = 2;
  s.ambient_dim_ = 3;
  return s;
}

ManifoldSpec ManifoldSpec::deformed_sphere() {
  ManifoldSpec s;
  s.kind_ = ManifoldKind::DeformedSphere;
  s.intrinsic_dim_ = 2;
  s.ambient_dim_ = 3;
  return s;
}

ManifoldSpec ManifoldSpec::external(std::shared_ptr<const PointCloud> reference) {
  if (!reference || reference->empty())
    throw std::invalid_argument("external: non-empty reference cloud required");
  ManifoldSpec s;
  s.kind_ = ManifoldKind::External;
  s.ambient_dim_ = static_cast<int>(reference->dim());
  s.intrinsic_dim_ = s.ambient_dim_;  // unknown; the toolkit estimates it
  s.external_ = std::move(reference);
  return s;
}

const PointCloud& ManifoldSpec::reference() const {
  if (!external_) throw std::logic_error("reference(): not an External manifold");
  return *external_;
}

double SwissRollGeometry::scale() {
  // diameter^2 = (8*pi)^2 + height^2: xz extent maximized at t1+t2 = 8*pi
  // with t1 - t2 an odd multiple of pi.
  static const double s = 1.0 / std::sqrt(64.0 * kPi * kPi + height * height);
  return s;
}

double ManifoldSpec::measure() const {
  switch (kind_) {
    case ManifoldKind::Hypercube:
      return std::pow(side_, intrinsic_dim_);
    case ManifoldKind::Hypersphere: {
      // surface area of the d-sphere of radius r in R^{d+1}
      const double d = intrinsic_dim_;
      return 2.0 * std::pow(kPi, (d + 1.0) / 2.0) / std::tgamma((d + 1.0) / 2.0) *
             std::pow(radius_, d);
    }
    case ManifoldKind::Wave:
      return wave_.bumps * kPi * wave_.amplitude * wave_.y_extent;
    case ManifoldKind::SwissRoll: {
      auto arc = [](double t) { return 0.5 * (t * std::sqrt(1 + t * t) + std::asinh(t)); };
      const double len = arc(SwissRollGeometry::t_max) - arc(SwissRollGeometry::t_min);
      const double s = SwissRollGeometry::scale();
      return len * SwissRollGeometry::height * s * s;
    }
    default:
      throw std::logic_error("measure(): no closed form for this manifold kind");
  }
}

std::string ManifoldSpec::describe() const {
  switch (kind_) {
    case ManifoldKind::Hypercube: return "hypercube";
    case ManifoldKind::Hypersphere: return "hypersphere";
    case ManifoldKind::Wave: return "wave";
    case ManifoldKind::SwissRoll: return "swissroll";
    case ManifoldKind::DeformedSphere: return "deformedsphere";
    case ManifoldKind::External: return "external";
  }
  return "?";
}

double wave_profile(const WaveParams& params, double x) {
  const double a = params.amplitude;
  double u = std::fmod(x, 2.0 * a);
  if (u < 0) u += 2.0 * a;
  const double v = u - a;
  return std::sqrt(std::max(a * a - v * v, 0.0));
}

namespace {

// r(theta, phi) = 1 + 0.3 sin(3 theta) sin(2 phi); stand-in deformed sphere
// (the paper cites an external construction without parameters).
double def_radius(double theta, double phi) {
  return 1.0 + 0.3 * std::sin(3.0 * theta) * std::sin(2.0 * phi);
}

// Area-element factor f = sqrt(R^4 + R^2 Rt^2 + R^2 (Rp/sin)^2); the surface
// measure is f(theta,phi) sin(theta) dtheta dphi.
double def_area_factor(double theta, double phi) {
  const double R = def_radius(theta, phi);
  const double Rt = 0.9 * std::cos(3.0 * theta) * std::sin(2.0 * phi);
  const double st = std::sin(theta);
  double Rp_over_sin;
  if (st > 1e-9)
    Rp_over_sin = 0.6 * std::sin(3.0 * theta) * std::cos(2.0 * phi) / st;
  else
    Rp_over_sin = 1.8 * std::cos(2.0 * phi);  // sin(3t)/sin(t) -> 3
  return std::sqrt(R * R * R * R + R * R * Rt * Rt + R * R * Rp_over_sin * Rp_over_sin);
}

constexpr double kDefAreaFactorMax = 3.2;  // sup bound: R<=1.3, |Rt|<=0.9, |Rp/sin|<=1.8

std::vector<double> def_point(double theta, double phi) {
  const double R = def_radius(theta, phi);
  const double st = std::sin(theta);
  return {R * st * std::cos(phi), R * st * std::sin(phi), R * std::cos(theta)};
}

void sample_sphere_direction(Rng& rng, std::span<double> out) {
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& v : out) {
      v = rng.normal();
      norm2 += v * v;
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& v : out) v *= inv;
}

}  // namespace

PointCloud sample_uniform(const ManifoldSpec& spec, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_uniform: n >= 1 required");
  Rng rng(seed);
  const std::size_t dim = spec.ambient_dim();
  PointCloud cloud(dim);
  cloud.reserve(n);
  std::vector<double> p(dim, 0.0);

  switch (spec.kind()) {
    case ManifoldKind::Hypercube: {
      const double h = spec.side() / 2.0;
      for (std::size_t i = 0; i < n; ++i) {
        std::fill(p.begin(), p.end(), 0.0);
        for (int j = 0; j < spec.intrinsic_dim(); ++j) p[j] = rng.uniform(-h, h);
        cloud.push_back(p);
      }
      break;
    }
    case ManifoldKind::Hypersphere: {
      const int sdim = spec.intrinsic_dim() + 1;
      std::vector<double> u(sdim);
      for (std::size_t i = 0; i < n; ++i) {
        std::fill(p.begin(), p.end(), 0.0);
        sample_sphere_direction(rng, u);
        for (int j = 0; j < sdim; ++j) p[j] = spec.radius() * u[j];
        cloud.push_back(p);
      }
      break;
    }
    case ManifoldKind::Wave: {
      // Uniform in surface area: uniform along each arc (angle parameter) and
      // along y; every bump carries equal arc length.
      const auto& w = spec.wave_params();
      const double a = w.amplitude;
      for (std::size_t i = 0; i < n; ++i) {
        const auto k = rng.uniform_index(static_cast<std::uint64_t>(w.bumps));
        const double theta = rng.uniform(0.0, kPi);
        const double cx = (2.0 * static_cast<double>(k) + 1.0) * a;
        p[0] = cx - a * std::cos(theta);
        p[1] = rng.uniform(0.0, w.y_extent);
        p[2] = a * std::sin(theta);
        cloud.push_back(p);
      }
      break;
    }
    case ManifoldKind::SwissRoll: {
      const double t0 = SwissRollGeometry::t_min, t1 = SwissRollGeometry::t_max;
      const double fmax = std::sqrt(1.0 + t1 * t1);
      const double s = SwissRollGeometry::scale();
      for (std::size_t i = 0; i < n; ++i) {
        double t;
        do {
          t = rng.uniform(t0, t1);
        } while (rng.uniform() * fmax >= std::sqrt(1.0 + t * t));
        const double h = rng.uniform(0.0, SwissRollGeometry::height);
        p[0] = s * t * std::cos(t);
        p[1] = s * h;
        p[2] = s * t * std::sin(t);
        cloud.push_back(p);
      }
      break;
    }
    case ManifoldKind::DeformedSphere: {
      std::vector<double> u(3);
      for (std::size_t i = 0; i < n; ++i) {
        double theta, phi;
        for (;;) {
          sample_sphere_direction(rng, u);
          theta = std::acos(std::clamp(u[2], -1.0, 1.0));
          phi = std::atan2(u[1], u[0]);
          if (rng.uniform() * kDefAreaFactorMax < def_area_factor(theta, phi)) break;
        }
        cloud.push_back(def_point(theta, phi));
      }
      break;
    }
    case ManifoldKind::External:
      throw std::invalid_argument(
          "sample_uniform: External manifolds are ingested clouds; subsample them instead");
  }
  return cloud;
}

PointCloud sample_conditional_wave(const ManifoldSpec& spec, std::size_t n, std::uint64_t seed) {
  if (spec.kind() != ManifoldKind::Wave)
    throw std::invalid_argument("sample_conditional_wave: Wave manifold required");
  if (n < 1) throw std::invalid_argument("sample_conditional_wave: n >= 1 required");
  const auto& w = spec.wave_params();
  Rng rng(seed);
  PointCloud cloud(3);
  cloud.reserve(n);
  double p[3];
  for (std::size_t i = 0; i < n; ++i) {
    p[0] = rng.uniform(0.0, w.x_extent());
    p[1] = rng.uniform(0.0, w.y_extent);
    p[2] = wave_profile(w, p[0]);
    cloud.push_back(p);
  }
  return cloud;
}

namespace {

void check_finite(std::span<const double> y) {
  for (double v : y)
    if (!std::isfinite(v)) throw std::invalid_argument("project: non-finite input");
}

// Golden-section refinement of a 1d minimum inside [lo, hi].
template <typename F>
double golden_min(F f, double lo, double hi, int iters = 80) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

}  // namespace

std::vector<double> project(const ManifoldSpec& spec, std::span<const double> y) {
  check_finite(y);
  if (static_cast<int>(y.size()) != spec.ambient_dim())
    throw std::invalid_argument("project: dimension mismatch");
  std::vector<double> out(y.begin(), y.end());

  switch (spec.kind()) {
    case ManifoldKind::Hypercube: {
      const double h = spec.side() / 2.0;
      for (int j = 0; j < spec.intrinsic_dim(); ++j) out[j] = std::clamp(out[j], -h, h);
      for (std::size_t j = spec.intrinsic_dim(); j < out.size(); ++j) out[j] = 0.0;
      return out;
    }
    case ManifoldKind::Hypersphere: {
      const int sdim = spec.intrinsic_dim() + 1;
      double norm2 = 0.0;
      for (int j = 0; j < sdim; ++j) norm2 += out[j] * out[j];
      if (norm2 == 0.0) {
        // singularity at the center: documented convention (radius, 0, ..., 0)
        std::fill(out.begin(), out.end(), 0.0);
        out[0] = spec.radius();
        return out;
      }
      const double f = spec.radius() / std::sqrt(norm2);
      for (int j = 0; j < sdim; ++j) out[j] *= f;
      for (std::size_t j = sdim; j < out.size(); ++j) out[j] = 0.0;
      return out;
    }
    case ManifoldKind::Wave: {
      const auto& w = spec.wave_params();
      const double a = w.amplitude;
      out[1] = std::clamp(out[1], 0.0, w.y_extent);
      double best = std::numeric_limits<double>::infinity();
      double bx = 0.0, bz = 0.0;
      for (int k = 0; k < w.bumps; ++k) {
        const double cx = (2.0 * k + 1.0) * a;
        const double vx = y[0] - cx, vz = y[2];
        double px, pz;
        const double r = std::hypot(vx, vz);
        if (vz > 0.0 && r > 0.0) {
          px = cx + a * vx / r;
          pz = a * vz / r;
        } else {
          // below the axis or at the center: nearest arc point is an endpoint
          px = vx > 0.0 ? cx + a : cx - a;
          pz = 0.0;
        }
        const double dx = y[0] - px, dz = y[2] - pz;
        const double d2 = dx * dx + dz * dz;
        if (d2 < best) {
          best = d2;
          bx = px;
          bz = pz;
        }
      }
      out[0] = bx;
      out[2] = bz;
      return out;
    }
    case ManifoldKind::SwissRoll: {
      const double s = SwissRollGeometry::scale();
      const double qx = y[0] / s, qz = y[2] / s;
      const double h = std::clamp(y[1] / s, 0.0, SwissRollGeometry::height);
      auto g = [&](double t) {
        const double dx = qx - t * std::cos(t);
        const double dz = qz - t * std::sin(t);
        return dx * dx + dz * dz;
      };
      const double t0 = SwissRollGeometry::t_min, t1 = SwissRollGeometry::t_max;
      const int grid = 4096;
      double tb = t0;
      double gb = g(t0);
      for (int i = 1; i <= grid; ++i) {
        const double t = t0 + (t1 - t0) * i / grid;
        const double v = g(t);
        if (v < gb) {
          gb = v;
          tb = t;
        }
      }
      const double step = (t1 - t0) / grid;
      const double t = golden_min(g, std::max(t0, tb - step), std::min(t1, tb + step));
      out[0] = s * t * std::cos(t);
      out[1] = s * h;
      out[2] = s * t * std::sin(t);
      return out;
    }
    case ManifoldKind::DeformedSphere: {
      double theta, phi;
      const double rho = std::hypot(y[0], y[1]);
      if (rho == 0.0 && y[2] == 0.0) {
        theta = kPi / 2.0;
        phi = 0.0;  // center singularity: same (+x) convention as the sphere
      } else {
        theta = std::atan2(rho, y[2]);
        phi = std::atan2(y[1], y[0]);
      }
      auto F = [&](double th, double ph) {
        const auto p = def_point(th, ph);
        const double dx = y[0] - p[0], dy = y[1] - p[1], dz = y[2] - p[2];
        return dx * dx + dy * dy + dz * dz;
      };
      // coarse global scan, then alternating 1d golden refinement
      double bt = theta, bp = phi, fb = F(theta, phi);
      const int nt = 48, np = 96;
      for (int i = 0; i <= nt; ++i)
        for (int j = 0; j < np; ++j) {
          const double th = kPi * i / nt;
          const double ph = 2.0 * kPi * j / np - kPi;
          const double v = F(th, ph);
          if (v < fb) {
            fb = v;
            bt = th;
            bp = ph;
          }
        }
      double wt = kPi / nt, wp = 2.0 * kPi / np;
      for (int round = 0; round < 6; ++round) {
        bt = golden_min([&](double th) { return F(th, bp); }, std::max(0.0, bt - wt),
                        std::min(kPi, bt + wt), 40);
        bp = golden_min([&](double ph) { return F(bt, ph); }, bp - wp, bp + wp, 40);
        wt *= 0.25;
        wp *= 0.25;
      }
      return def_point(bt, bp);
    }
    case ManifoldKind::External: {
      const PointCloud& ref = spec.reference();
      std::size_t bi = 0;
      double bd = sq_dist(y, ref[0]);
      for (std::size_t i = 1; i < ref.size(); ++i) {
        const double d = sq_dist(y, ref[i]);
        if (d < bd) {
          bd = d;
          bi = i;
        }
      }
      const auto p = ref[bi];
      return {p.begin(), p.end()};
    }
  }
  throw std::logic_error("project: unreachable");
}

}  // namespace repgap
