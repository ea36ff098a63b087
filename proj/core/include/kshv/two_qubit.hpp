// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kshv/geometry.hpp"
#include "kshv/qm.hpp"
#include "kshv/quadrature.hpp"
#include "kshv/rng.hpp"
#include "kshv/single_qubit.hpp"

namespace kshv {

// Factorized subensemble density of a photon pair with definite
// polarizations u and v: rho(l1, l2) = rho_u(l1) * rho_v(l2).
struct PairDensity {
  UnitVector u;
  UnitVector v;
  double operator()(const UnitVector& lambda1, const UnitVector& lambda2) const {
    return density(u, lambda1) * density(v, lambda2);
  }
};

// One indicator-product term of a polarization distribution:
//   weight * chi(axis_u, sign_u, l_u) * chi(axis_v, sign_v, l_v) / pi^2.
struct DistributionTerm {
  double weight = 0.0;
  UnitVector axis_u;
  Sign sign_u = Sign::plus;
  UnitVector axis_v;
  Sign sign_v = Sign::plus;
};

// Distribution of polarization pairs (u, v) over the product of two
// spheres, kept as a finite sum of weighted indicator-product terms. Every
// distribution the model needs has this shape, which makes the correlation
// integral separable term by term. The distribution is deliberately not
// normalized; its total integral ("mass", 4 * sum of weights) is reported
// separately and used as an importance weight by samplers.
class PolarizationDistribution {
 public:
  PolarizationDistribution() = default;  // identically zero
  explicit PolarizationDistribution(std::vector<DistributionTerm> terms);

  const std::vector<DistributionTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  double evaluate(const UnitVector& lambda_u, const UnitVector& lambda_v) const;

  /// Total integral over both spheres, in closed form.
  double mass() const;

 private:
  std::vector<DistributionTerm> terms_;
};

// The contextual two-term distribution that reproduces the singlet
// correlation -a.b: weights 1/2 on chi_a+(l_u) chi_a-(l_v) and on
// chi_b-(l_u) chi_b+(l_v). It depends on both settings, which is exactly
// the contextuality under study.
PolarizationDistribution singlet_distribution(const UnitVector& n_a,
                                              const UnitVector& n_b);

/// One-sided variant: the single term chi_a+(l_u) chi_a-(l_v) / pi^2 with
/// weight one. Yields the same correlation as the symmetric form.
PolarizationDistribution singlet_distribution_one_sided(const UnitVector& n_a);

/// Non-contextual control: the two-term shape above but built on a fixed
/// axis, independent of the settings. Gives E(a, b) = -(a . axis)(b . axis).
PolarizationDistribution fixed_axis_distribution(const UnitVector& axis);

/// Terms {(|t_ij|, e_i, +, e_j, sign t_ij)}; the resulting correlation is
/// a^T t b, so any correlation tensor can be realized. Entries must lie in
/// [-1, 1].
PolarizationDistribution distribution_from_tensor(const CorrelationTensor& t);

/// Concatenates component term lists with weights scaled by the mixture
/// weights, which must be nonnegative and sum to one.
PolarizationDistribution mixed_state_distribution(
    const std::vector<std::pair<double, PolarizationDistribution>>& components);

struct ModelCorrelation {
  double value = 0.0;
  Method method = Method::closed;
  double std_error = 0.0;  // zero for closed and grid
};

/// Exact evaluation of the correlation integral:
/// sum of weight * sign_u * sign_v * (a . axis_u) * (b . axis_v).
double correlation_closed(const PolarizationDistribution& f, const UnitVector& n_a,
                          const UnitVector& n_b);

/// Same integral with each term's two sphere factors done by the
/// aligned-frame grid rule.
ModelCorrelation correlation_grid(const PolarizationDistribution& f,
                                  const UnitVector& n_a, const UnitVector& n_b,
                                  int n_theta = 256);

/// Monte Carlo: samples (u, v) from f / mass and scales the mean of
/// (u . a)(v . b) by the mass.
ModelCorrelation correlation_mc(const PolarizationDistribution& f,
                                const UnitVector& n_a, const UnitVector& n_b,
                                std::int64_t n, RngStream& rng);

/// Parallel variant with one stream per worker and fixed reduction order.
ModelCorrelation correlation_mc(const PolarizationDistribution& f,
                                const UnitVector& n_a, const UnitVector& n_b,
                                std::int64_t n, std::uint64_t seed, int n_workers);

/// Draws one polarization pair from f / mass: term index proportional to
/// weight, then uniform points on the term's two hemispheres.
std::pair<UnitVector, UnitVector> sample_polarizations(
    const PolarizationDistribution& f, RngStream& rng);

// Single-side averages under the factorized pair density: both equal the
// corresponding dot product (Malus' law), here measured numerically.
std::pair<Estimate, Estimate> malus_grid(const UnitVector& u, const UnitVector& v,
                                         const UnitVector& n_a, const UnitVector& n_b,
                                         int n_theta = 512);
std::pair<Estimate, Estimate> malus_mc(const UnitVector& u, const UnitVector& v,
                                       const UnitVector& n_a, const UnitVector& n_b,
                                       std::int64_t n, RngStream& rng);

enum class Side { A, B };

// Ensemble-level single-party average int du dv f(u,v) (u . setting) for
// side A (v . setting for side B). A diagnostic: the distribution is not
// normalized and this quantity is not constrained by the per-subensemble
// averages. For the singlet shape it equals 1 - a.b on side A.
double ensemble_marginal(const PolarizationDistribution& f,
                         const UnitVector& setting, Side side);

/// Grid cross-check of ensemble_marginal.
double ensemble_marginal_grid(const PolarizationDistribution& f,
                              const UnitVector& setting, Side side,
                              int n_theta = 512);

}  // namespace kshv
