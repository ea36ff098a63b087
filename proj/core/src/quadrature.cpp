// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#include "kshv/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace kshv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

void require_resolution(int n_theta, int n_phi) {
  if (n_theta < 8 || n_phi < 8) {
    throw std::invalid_argument("sphere grid: resolution must be at least 8");
  }
}

struct MomentSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

Estimate estimate_from_sums(const MomentSums& s, std::int64_t n, double scale) {
  const double mean = s.sum / static_cast<double>(n);
  double var = 0.0;
  if (n > 1) {
    var = (s.sum_sq / static_cast<double>(n) - mean * mean) *
          (static_cast<double>(n) / static_cast<double>(n - 1));
    var = std::max(0.0, var);
  }
  return Estimate{scale * mean, scale * std::sqrt(var / static_cast<double>(n)), n};
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::closed: return "closed";
    case Method::grid: return "grid";
    case Method::mc: return "mc";
  }
  return "unknown";
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration on P_n starting from the Chebyshev-like guess.
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double integrate_sphere_grid(const SphereIntegrand& f, int n_theta, int n_phi) {
  require_resolution(n_theta, n_phi);
  const GaussLegendreRule rule = gauss_legendre(n_theta);
  const double dphi = kTwoPi / n_phi;
  double total = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double c = rule.nodes[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    double ring = 0.0;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = dphi * (j + 0.5);
      ring += f(UnitVector(s * std::cos(phi), s * std::sin(phi), c));
    }
    total += rule.weights[i] * ring * dphi;
  }
  return total;
}

double integrate_sphere_grid(const SphereIntegrand& f, int n_theta) {
  return integrate_sphere_grid(f, n_theta, 2 * n_theta);
}

double integrate_hemisphere_grid(const UnitVector& pole, const SphereIntegrand& f,
                                 int n_theta, int n_phi) {
  require_resolution(n_theta, n_phi);
  const GaussLegendreRule rule = gauss_legendre(n_theta);
  const Rotation3 frame = rotation_to_pole(pole);
  const double dphi = kTwoPi / n_phi;
  double total = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double c = 0.5 * (rule.nodes[i] + 1.0);  // cos(theta) in (0, 1)
    const double w = 0.5 * rule.weights[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    double ring = 0.0;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = dphi * (j + 0.5);
      const Vec3 local{s * std::cos(phi), s * std::sin(phi), c};
      ring += f(UnitVector(frame.apply(local)));
    }
    total += w * ring * dphi;
  }
  return total;
}

double integrate_hemisphere_grid(const UnitVector& pole, const SphereIntegrand& f,
                                 int n_theta) {
  return integrate_hemisphere_grid(pole, f, n_theta, 2 * n_theta);
}

Estimate integrate_sphere_mc(const SphereIntegrand& f, std::int64_t n,
                             RngStream& rng) {
  if (n < 1000) throw std::invalid_argument("integrate_sphere_mc: n must be >= 1000");
  MomentSums s;
  for (std::int64_t i = 0; i < n; ++i) {
    const double v = f(sample_uniform_sphere(rng));
    s.sum += v;
    s.sum_sq += v * v;
  }
  return estimate_from_sums(s, n, kFourPi);
}

Estimate integrate_sphere_mc(const SphereIntegrand& f, std::int64_t n,
                             std::uint64_t seed, int n_workers) {
  if (n < 1000) throw std::invalid_argument("integrate_sphere_mc: n must be >= 1000");
  if (n_workers < 1) throw std::invalid_argument("integrate_sphere_mc: n_workers must be >= 1");
  const int workers = static_cast<int>(std::min<std::int64_t>(n_workers, n));
  std::vector<MomentSums> partial(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::int64_t base = n / workers;
  const std::int64_t extra = n % workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t count = base + (w < extra ? 1 : 0);
    pool.emplace_back([&f, &partial, w, count, seed] {
      RngStream rng(seed, static_cast<std::uint64_t>(w));
      MomentSums s;
      for (std::int64_t i = 0; i < count; ++i) {
        const double v = f(sample_uniform_sphere(rng));
        s.sum += v;
        s.sum_sq += v * v;
      }
      partial[w] = s;
    });
  }
  for (auto& t : pool) t.join();
  MomentSums total;
  for (const MomentSums& s : partial) {  // fixed order keeps the sum bit-stable
    total.sum += s.sum;
    total.sum_sq += s.sum_sq;
  }
  return estimate_from_sums(total, n, kFourPi);
}

double line_integral_great_circle(const UnitVector& pole, const CircleIntegrand& g,
                                  int n_steps) {
  if (n_steps < 16) {
    throw std::invalid_argument("line_integral_great_circle: n_steps must be >= 16");
  }
  const Rotation3 frame = rotation_to_pole(pole);
  const Vec3 e1 = frame.apply(Vec3{1, 0, 0});
  const Vec3 e2 = frame.apply(Vec3{0, 1, 0});
  const double h = kTwoPi / n_steps;
  double total = 0.0;
  for (int k = 0; k < n_steps; ++k) {
    const double s = h * (k + 0.5);
    const double cs = std::cos(s);
    const double sn = std::sin(s);
    const UnitVector point(cs * e1 + sn * e2);
    const UnitVector tangent(-sn * e1 + cs * e2);
    total += g(point, tangent);
  }
  return total * h;
}

double lune_flux(const UnitVector& n_a, const UnitVector& n_b,
                 const UnitVector& field_axis, int n_theta, int n_phi) {
  if (dot(n_a, n_b) <= -1.0 + 1e-14) return 0.0;  // empty intersection
  const Vec3 axis = field_axis.vec();
  const Vec3 b = n_b.vec();
  return integrate_hemisphere_grid(
      n_a,
      [&axis, &b](const UnitVector& v) {
        return dot(v.vec(), b) >= 0.0 ? dot(v.vec(), axis) : 0.0;
      },
      n_theta, n_phi);
}

double lune_flux(const UnitVector& n_a, const UnitVector& n_b,
                 const UnitVector& field_axis, int n_theta) {
  return lune_flux(n_a, n_b, field_axis, n_theta, 2 * n_theta);
}

}  // namespace kshv
