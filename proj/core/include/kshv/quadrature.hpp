// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kshv/geometry.hpp"
#include "kshv/rng.hpp"

namespace kshv {

enum class Method { closed, grid, mc };
std::string to_string(Method m);

/// Monte Carlo result; std_error comes from the sample variance.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
};

// Total function on the sphere. Hemisphere indicators are fine; poles or
// other singularities are not.
using SphereIntegrand = std::function<double(const UnitVector&)>;

// Integrand along a great circle, called with the point and the unit
// tangent of the arc-length parameterization.
using CircleIntegrand =
    std::function<double(const UnitVector& point, const UnitVector& tangent)>;

struct GaussLegendreRule {
  std::vector<double> nodes;    // in (-1, 1), ascending
  std::vector<double> weights;  // positive, sum 2
};

/// Gauss-Legendre nodes and weights on [-1, 1].
GaussLegendreRule gauss_legendre(int n);

// Product rule on the sphere: Gauss-Legendre in cos(theta), uniform
// periodic midpoint rule in phi. Requires n_theta, n_phi >= 8.
double integrate_sphere_grid(const SphereIntegrand& f, int n_theta, int n_phi);
double integrate_sphere_grid(const SphereIntegrand& f, int n_theta);

// Same rule restricted to the closed hemisphere { v : v . pole >= 0 },
// integrating in a frame whose polar axis is `pole` so the hemisphere
// cutoff is exact.
double integrate_hemisphere_grid(const UnitVector& pole, const SphereIntegrand& f,
                                 int n_theta, int n_phi);
double integrate_hemisphere_grid(const UnitVector& pole, const SphereIntegrand& f,
                                 int n_theta);

/// Uniform-sphere Monte Carlo: value = 4*pi*mean(f). Requires n >= 1000.
Estimate integrate_sphere_mc(const SphereIntegrand& f, std::int64_t n,
                             RngStream& rng);

/// Splits `n` over `n_workers` threads with one RNG stream per worker and a
/// fixed reduction order; the result depends only on (seed, n_workers).
Estimate integrate_sphere_mc(const SphereIntegrand& f, std::int64_t n,
                             std::uint64_t seed, int n_workers);

/// Line integral of g along the equator of `pole`, counterclockwise as seen
/// from the pole, parameterized by arc length (total length 2*pi).
/// Requires n_steps >= 16.
double line_integral_great_circle(const UnitVector& pole, const CircleIntegrand& g,
                                  int n_steps);

// Flux of the constant field `field_axis` through the lune N_a intersect
// N_b (the overlap of the two closed hemispheres): integral of
// (field_axis . v) dS over the lune. The grid is aligned with n_a so only
// the n_b cutoff is resolved by sampling. Antipodal axes give the empty
// lune and exactly zero.
double lune_flux(const UnitVector& n_a, const UnitVector& n_b,
                 const UnitVector& field_axis, int n_theta);
double lune_flux(const UnitVector& n_a, const UnitVector& n_b,
                 const UnitVector& field_axis, int n_theta, int n_phi);

}  // namespace kshv
