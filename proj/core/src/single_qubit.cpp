// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#include "kshv/single_qubit.hpp"

#include <numbers>

namespace kshv {

namespace {
constexpr double kInvPi = 1.0 / std::numbers::pi;
}

UnitVector signed_axis(const UnitVector& axis, Sign s) {
  return s == Sign::plus ? axis : -axis;
}

double density(const UnitVector& axis, const UnitVector& lambda) {
  const double c = dot(lambda, axis);
  return c >= 0.0 ? c * kInvPi : 0.0;
}

int chi(const UnitVector& axis, Sign sign, const UnitVector& lambda) {
  const double c = dot(lambda, axis);
  const double oriented = (sign == Sign::plus) ? c : -c;
  return oriented >= 0.0 ? 1 : 0;
}

int outcome(const UnitVector& axis, const UnitVector& lambda) {
  return chi(axis, Sign::plus, lambda) - chi(axis, Sign::minus, lambda);
}

int outcome_dichotomic(const UnitVector& axis, const UnitVector& lambda) {
  return dot(lambda, axis) >= 0.0 ? +1 : -1;
}

double overlap_closed(const UnitVector& n_a, const UnitVector& n_b, Sign sign_b) {
  return 0.5 * (1.0 + sign_value(sign_b) * dot(n_a, n_b));
}

double overlap_grid(const UnitVector& n_a, const UnitVector& n_b, Sign sign_b,
                    int n_theta) {
  // (1/pi) * flux of n_a through the lune of n_a and sign_b * n_b.
  return kInvPi * lune_flux(n_a, signed_axis(n_b, sign_b), n_a, n_theta);
}

Estimate overlap_mc(const UnitVector& n_a, const UnitVector& n_b, Sign sign_b,
                    std::int64_t n, RngStream& rng) {
  return integrate_sphere_mc(
      [&n_a, &n_b, sign_b](const UnitVector& lambda) {
        return density(n_a, lambda) * chi(n_b, sign_b, lambda);
      },
      n, rng);
}

}  // namespace kshv
