// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "kshv/geometry.hpp"
#include "kshv/quadrature.hpp"
#include "kshv/rng.hpp"

namespace kshv {

// Selects between the +axis and -axis eigendirection of a polarizer.
enum class Sign : int { minus = -1, plus = +1 };

constexpr int sign_value(Sign s) { return static_cast<int>(s); }

UnitVector signed_axis(const UnitVector& axis, Sign s);

// Single-qubit Kochen-Specker model. Hidden variables live on the Bloch
// sphere; the state along `axis` owns the cosine density
//
//   rho_axis(v) = (v . axis) / pi   on  v . axis >= 0,   0 elsewhere,
//
// and a measurement along `axis` answers with the hemisphere indicator
// chi(v) = Theta(v . axis), with the convention Theta(0) = 1.

/// Density of the subensemble polarized along `axis`, evaluated at `lambda`.
double density(const UnitVector& axis, const UnitVector& lambda);

/// Hemisphere indicator Theta(lambda . (sign * axis)); Theta(0) = 1, so on
/// the equator both signs report 1.
int chi(const UnitVector& axis, Sign sign, const UnitVector& lambda);

/// chi(+) - chi(-): +1 or -1 off the equator, 0 exactly on it.
int outcome(const UnitVector& axis, const UnitVector& lambda);

/// Strictly dichotomic variant used by the event simulator: the equator
/// tie is broken toward +1, so the result is always +1 or -1.
int outcome_dichotomic(const UnitVector& axis, const UnitVector& lambda);

struct SubensembleDensity {
  UnitVector axis;
  double operator()(const UnitVector& lambda) const { return density(axis, lambda); }
};

struct CharacteristicFunction {
  UnitVector axis;
  Sign sign = Sign::plus;
  int operator()(const UnitVector& lambda) const { return chi(axis, sign, lambda); }
};

/// Overlap integral of rho_a against chi(sign_b * b) in closed form:
/// (1 + sign_b * (a . b)) / 2.
double overlap_closed(const UnitVector& n_a, const UnitVector& n_b,
                      Sign sign_b = Sign::plus);

/// Same integral by the aligned-frame grid rule.
double overlap_grid(const UnitVector& n_a, const UnitVector& n_b,
                    Sign sign_b = Sign::plus, int n_theta = 512);

/// Same integral by uniform-sphere Monte Carlo.
Estimate overlap_mc(const UnitVector& n_a, const UnitVector& n_b, Sign sign_b,
                    std::int64_t n, RngStream& rng);

}  // namespace kshv
