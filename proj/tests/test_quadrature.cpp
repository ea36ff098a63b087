// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "kshv/quadrature.hpp"
#include "oracles.hpp"

using namespace kshv;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kFourPi = 4.0 * kPi;
}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("Gauss-Legendre rule basics") {
  const GaussLegendreRule rule = gauss_legendre(16);
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[15 - i]).epsilon(1e-14));
    CHECK(rule.weights[i] == doctest::Approx(rule.weights[15 - i]).epsilon(1e-14));
  }
  // Exact for polynomials up to degree 2n-1: integral of x^14 on [-1,1].
  double val = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    val += rule.weights[i] * std::pow(rule.nodes[i], 14);
  }
  CHECK(val == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("sphere grid integrates constants exactly") {
  const double area = integrate_sphere_grid([](const UnitVector&) { return 1.0; }, 64);
  CHECK(std::abs(area - kFourPi) < 1e-10);
}

TEST_CASE("sphere grid rejects tiny resolutions") {
  CHECK_THROWS_AS(integrate_sphere_grid([](const UnitVector&) { return 1.0; }, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_sphere_grid([](const UnitVector&) { return 1.0; }, 64, 4),
                  std::invalid_argument);
}

TEST_CASE("sphere grid: aligned hemisphere indicator") {
  const double val = integrate_sphere_grid(
      [](const UnitVector& v) { return v.z() >= 0.0 ? 1.0 : 0.0; }, 512);
  CHECK(std::abs(val - kTwoPi) < 1e-3);
}

TEST_CASE("sphere grid: projected indicator against the 1-D oracle") {
  // integral over the hemisphere of cos(theta): 2*pi * int_0^{pi/2} cos sin.
  const double oracle = kshv::testing::simpson(
      [](double t) { return std::cos(t) * std::sin(t) * kTwoPi; }, 0.0, kPi / 2, 2000);
  CHECK(oracle == doctest::Approx(kPi).epsilon(1e-10));
  const UnitVector axis = UnitVector::normalized(Vec3{0.2, 0.7, 0.4});
  const double val = integrate_sphere_grid(
      [&axis](const UnitVector& v) {
        const double c = dot(v, axis);
        return c >= 0.0 ? c : 0.0;
      },
      512);
  CHECK(std::abs(val - oracle) < 1e-3);
}

TEST_CASE("Monte Carlo: constant integrand is exact") {
  RngStream rng(1, 0);
  const Estimate e = integrate_sphere_mc([](const UnitVector&) { return 1.0; }, 10000, rng);
  CHECK(e.value == doctest::Approx(kFourPi).epsilon(1e-14));
  CHECK(e.std_error == 0.0);
  CHECK(e.n_samples == 10000);
}

TEST_CASE("Monte Carlo rejects tiny sample counts") {
  RngStream rng(1, 0);
  CHECK_THROWS_AS(integrate_sphere_mc([](const UnitVector&) { return 1.0; }, 999, rng),
                  std::invalid_argument);
}

TEST_CASE("Monte Carlo: hemisphere indicator within three sigma") {
  RngStream rng(5, 0);
  const UnitVector axis = UnitVector::normalized(Vec3{1, -2, 0.5});
  const Estimate e = integrate_sphere_mc(
      [&axis](const UnitVector& v) { return dot(v, axis) >= 0.0 ? 1.0 : 0.0; },
      1000000, rng);
  CHECK(std::abs(e.value - kTwoPi) < 3 * e.std_error);
}

TEST_CASE("Monte Carlo vs grid on a smooth product integrand") {
  const UnitVector n_a = UnitVector::normalized(Vec3{0.3, 0.1, 1.0});
  const UnitVector n_b = UnitVector::normalized(Vec3{-0.4, 0.8, 0.2});
  const SphereIntegrand f = [&](const UnitVector& v) {
    return dot(v, n_a) * dot(v, n_b);
  };
  const double by_grid = integrate_sphere_grid(f, 64);
  CHECK(by_grid == doctest::Approx(kFourPi / 3.0 * dot(n_a, n_b)).epsilon(1e-12));
  RngStream rng(6, 0);
  const Estimate e = integrate_sphere_mc(f, 1000000, rng);
  CHECK(std::abs(e.value - by_grid) < 3 * e.std_error);
}

TEST_CASE("parallel Monte Carlo is reproducible and matches one worker") {
  const UnitVector axis = UnitVector::normalized(Vec3{0.3, 0.4, -0.8});
  const SphereIntegrand f = [&axis](const UnitVector& v) {
    return dot(v, axis) >= 0.0 ? dot(v, axis) : 0.0;
  };
  const Estimate four_a = integrate_sphere_mc(f, 100000, 99, 4);
  const Estimate four_b = integrate_sphere_mc(f, 100000, 99, 4);
  CHECK(four_a.value == four_b.value);
  CHECK(four_a.std_error == four_b.std_error);

  RngStream rng(99, 0);
  const Estimate serial = integrate_sphere_mc(f, 100000, rng);
  const Estimate one = integrate_sphere_mc(f, 100000, 99, 1);
  CHECK(one.value == serial.value);
  CHECK(std::abs(four_a.value - kPi) < 3 * four_a.std_error);
}

TEST_CASE("great-circle line integrals") {
  const UnitVector pole = UnitVector::normalized(Vec3{0.4, -0.2, 0.89});
  const double len = line_integral_great_circle(
      pole, [](const UnitVector&, const UnitVector&) { return 1.0; }, 256);
  CHECK(std::abs(len - kTwoPi) < 1e-10);

  // The bivector r x dr/ds equals the pole all along its own equator.
  const double self = line_integral_great_circle(
      pole,
      [&pole](const UnitVector& r, const UnitVector& t) {
        return dot(cross(r, t), pole.vec());
      },
      256);
  CHECK(std::abs(self - kTwoPi) < 1e-10);

  const UnitVector n_b = UnitVector::normalized(Vec3{-0.7, 0.5, 0.3});
  const double other = line_integral_great_circle(
      pole,
      [&n_b](const UnitVector& r, const UnitVector& t) {
        return dot(cross(r, t), n_b.vec());
      },
      512);
  CHECK(std::abs(other - kTwoPi * dot(pole, n_b)) < 1e-8);
}

TEST_CASE("line integral rejects too few steps") {
  CHECK_THROWS_AS(line_integral_great_circle(
                      unit_z(), [](const UnitVector&, const UnitVector&) { return 1.0; }, 8),
                  std::invalid_argument);
}

TEST_CASE("lune flux special cases") {
  const UnitVector z = unit_z();
  // Full hemisphere: the 1-D oracle for the projected integral gives pi.
  const double hemisphere_oracle = kshv::testing::simpson(
      [](double t) { return std::cos(t) * std::sin(t) * kTwoPi; }, 0.0, kPi / 2, 2000);
  CHECK(std::abs(lune_flux(z, z, z, 512) - hemisphere_oracle) < 1e-3);

  // Orthogonal hemispheres: half of the hemisphere value.
  const UnitVector x = unit_x();
  CHECK(std::abs(lune_flux(z, x, z, 512) - kPi / 2) < 1e-3);

  // Antipodal hemispheres have empty intersection.
  CHECK(lune_flux(z, -z, z, 512) == 0.0);
}

TEST_CASE("surface flux equals the split contour integral") {
  // The lune boundary is half of each equator; integrating the bivector
  // projection along both halves reproduces the surface value
  // (1 + a.b) / 2 after dividing by pi.
  RngStream rng(17, 0);
  for (int trial = 0; trial < 8; ++trial) {
    const UnitVector a = sample_uniform_sphere(rng);
    UnitVector b = sample_uniform_sphere(rng);
    if (std::abs(dot(a, b)) > 0.999) b = unit_y();
    const double surface = lune_flux(a, b, a, 512) / kPi;

    const CircleIntegrand flux_a = [&](const UnitVector& r, const UnitVector& t) {
      return dot(r, b) >= 0.0 ? dot(cross(r, t), a.vec()) : 0.0;
    };
    const CircleIntegrand flux_b = [&](const UnitVector& r, const UnitVector& t) {
      return dot(r, a) >= 0.0 ? dot(cross(r, t), a.vec()) : 0.0;
    };
    const double contour = (line_integral_great_circle(a, flux_a, 16384) +
                            line_integral_great_circle(b, flux_b, 16384)) /
                           (2.0 * kPi);

    const double closed = 0.5 * (1.0 + dot(a, b));
    CHECK(std::abs(surface - closed) < 2e-3);
    CHECK(std::abs(contour - closed) < 2e-3);
    CHECK(std::abs(surface - contour) < 2e-3);
  }
}

TEST_CASE("doubling the polar resolution shrinks the indicator error") {
  RngStream rng(23, 0);
  const int resolutions[4] = {64, 128, 256, 512};
  double mean_err[4] = {0, 0, 0, 0};
  const int n_pairs = 20;
  for (int p = 0; p < n_pairs; ++p) {
    const UnitVector a = sample_uniform_sphere(rng);
    const UnitVector b = sample_uniform_sphere(rng);
    const double closed = kPi * 0.5 * (1.0 + dot(a, b));
    for (int k = 0; k < 4; ++k) {
      mean_err[k] += std::abs(lune_flux(a, b, a, resolutions[k]) - closed) / n_pairs;
    }
  }
  CHECK(mean_err[1] < mean_err[0]);
  CHECK(mean_err[2] < mean_err[1]);
  CHECK(mean_err[3] < mean_err[2]);
}

TEST_CASE("grid and Monte Carlo agree on the overlap integrand") {
  RngStream rng(31, 0);
  for (int trial = 0; trial < 4; ++trial) {
    const UnitVector a = sample_uniform_sphere(rng);
    const UnitVector b = sample_uniform_sphere(rng);
    const SphereIntegrand f = [&](const UnitVector& v) {
      const double c = dot(v, a);
      return (c >= 0.0 && dot(v, b) >= 0.0) ? c / kPi : 0.0;
    };
    const double by_grid = lune_flux(a, b, a, 512) / kPi;
    RngStream mc_rng(1000 + static_cast<std::uint64_t>(trial), 0);
    const Estimate mc = integrate_sphere_mc(f, 1000000, mc_rng);
    CHECK(std::abs(by_grid - mc.value) < 3 * mc.std_error + 2e-3);
  }
}

}  // TEST_SUITE
