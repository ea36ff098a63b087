// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#include "kshv/two_qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace kshv {

namespace {

constexpr double kInvPi = 1.0 / std::numbers::pi;
constexpr double kInvPiSq = kInvPi * kInvPi;

std::vector<double> cumulative_weights(const PolarizationDistribution& f) {
  std::vector<double> cum;
  cum.reserve(f.terms().size());
  double acc = 0.0;
  for (const DistributionTerm& t : f.terms()) {
    acc += t.weight;
    cum.push_back(acc);
  }
  return cum;
}

std::size_t pick_term(const std::vector<double>& cum, double xi_total) {
  const auto it = std::upper_bound(cum.begin(), cum.end(), xi_total);
  return std::min<std::size_t>(static_cast<std::size_t>(it - cum.begin()),
                               cum.size() - 1);
}

// (1/pi) * integral of (v . setting) over the hemisphere of `pole`,
// evaluated honestly by the grid; equals setting . pole.
double projected_hemisphere_integral(const UnitVector& pole,
                                     const UnitVector& setting, int n_theta) {
  const Vec3 s = setting.vec();
  return kInvPi * integrate_hemisphere_grid(
                      pole, [&s](const UnitVector& v) { return dot(v.vec(), s); },
                      n_theta);
}

struct MeanAccumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  void add(double v) {
    sum += v;
    sum_sq += v * v;
  }
};

Estimate mean_estimate(const MeanAccumulator& acc, std::int64_t n, double scale) {
  const double mean = acc.sum / static_cast<double>(n);
  double var = 0.0;
  if (n > 1) {
    var = (acc.sum_sq / static_cast<double>(n) - mean * mean) *
          (static_cast<double>(n) / static_cast<double>(n - 1));
    var = std::max(0.0, var);
  }
  return Estimate{scale * mean, scale * std::sqrt(var / static_cast<double>(n)), n};
}

}  // namespace

PolarizationDistribution::PolarizationDistribution(std::vector<DistributionTerm> terms)
    : terms_(std::move(terms)) {
  for (const DistributionTerm& t : terms_) {
    if (t.weight < 0.0) {
      throw std::invalid_argument("PolarizationDistribution: negative term weight");
    }
  }
}

double PolarizationDistribution::evaluate(const UnitVector& lambda_u,
                                          const UnitVector& lambda_v) const {
  double val = 0.0;
  for (const DistributionTerm& t : terms_) {
    val += t.weight * chi(t.axis_u, t.sign_u, lambda_u) *
           chi(t.axis_v, t.sign_v, lambda_v) * kInvPiSq;
  }
  return val;
}

double PolarizationDistribution::mass() const {
  // Each term integrates to weight * (2 pi)^2 / pi^2 = 4 * weight.
  double w = 0.0;
  for (const DistributionTerm& t : terms_) w += t.weight;
  return 4.0 * w;
}

PolarizationDistribution singlet_distribution(const UnitVector& n_a,
                                              const UnitVector& n_b) {
  return PolarizationDistribution({
      {0.5, n_a, Sign::plus, n_a, Sign::minus},
      {0.5, n_b, Sign::minus, n_b, Sign::plus},
  });
}

PolarizationDistribution singlet_distribution_one_sided(const UnitVector& n_a) {
  return PolarizationDistribution({{1.0, n_a, Sign::plus, n_a, Sign::minus}});
}

PolarizationDistribution fixed_axis_distribution(const UnitVector& axis) {
  return PolarizationDistribution({
      {0.5, axis, Sign::plus, axis, Sign::minus},
      {0.5, axis, Sign::minus, axis, Sign::plus},
  });
}

PolarizationDistribution distribution_from_tensor(const CorrelationTensor& t) {
  static const UnitVector basis[3] = {unit_x(), unit_y(), unit_z()};
  std::vector<DistributionTerm> terms;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double tij = t(i, j);
      if (std::abs(tij) > 1.0 + 1e-12) {
        throw std::invalid_argument("distribution_from_tensor: entries must lie in [-1, 1]");
      }
      if (tij == 0.0) continue;
      // The sign rides on the second-sphere indicator.
      terms.push_back({std::abs(tij), basis[i], Sign::plus, basis[j],
                       tij > 0.0 ? Sign::plus : Sign::minus});
    }
  }
  return PolarizationDistribution(std::move(terms));
}

PolarizationDistribution mixed_state_distribution(
    const std::vector<std::pair<double, PolarizationDistribution>>& components) {
  double total = 0.0;
  for (const auto& [w, f] : components) {
    if (w < 0.0) throw std::invalid_argument("mixed_state_distribution: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("mixed_state_distribution: weights must sum to one");
  }
  std::vector<DistributionTerm> terms;
  for (const auto& [w, f] : components) {
    for (DistributionTerm t : f.terms()) {
      t.weight *= w;
      terms.push_back(t);
    }
  }
  return PolarizationDistribution(std::move(terms));
}

double correlation_closed(const PolarizationDistribution& f, const UnitVector& n_a,
                          const UnitVector& n_b) {
  double e = 0.0;
  for (const DistributionTerm& t : f.terms()) {
    e += t.weight * sign_value(t.sign_u) * sign_value(t.sign_v) *
         dot(n_a, t.axis_u) * dot(n_b, t.axis_v);
  }
  return e;
}

ModelCorrelation correlation_grid(const PolarizationDistribution& f,
                                  const UnitVector& n_a, const UnitVector& n_b,
                                  int n_theta) {
  // The four-fold integral splits per term into a product of two sphere
  // integrals, each over one hemisphere.
  double e = 0.0;
  for (const DistributionTerm& t : f.terms()) {
    const double fu =
        projected_hemisphere_integral(signed_axis(t.axis_u, t.sign_u), n_a, n_theta);
    const double fv =
        projected_hemisphere_integral(signed_axis(t.axis_v, t.sign_v), n_b, n_theta);
    e += t.weight * fu * fv;
  }
  return ModelCorrelation{e, Method::grid, 0.0};
}

std::pair<UnitVector, UnitVector> sample_polarizations(
    const PolarizationDistribution& f, RngStream& rng) {
  if (f.empty() || !(f.mass() > 0.0)) {
    throw std::invalid_argument("sample_polarizations: distribution has zero mass");
  }
  const std::vector<double> cum = cumulative_weights(f);
  const double xi = rng.uniform() * cum.back();
  const DistributionTerm& t = f.terms()[pick_term(cum, xi)];
  const UnitVector u = sample_uniform_hemisphere(signed_axis(t.axis_u, t.sign_u), rng);
  const UnitVector v = sample_uniform_hemisphere(signed_axis(t.axis_v, t.sign_v), rng);
  return {u, v};
}

ModelCorrelation correlation_mc(const PolarizationDistribution& f,
                                const UnitVector& n_a, const UnitVector& n_b,
                                std::int64_t n, RngStream& rng) {
  if (f.empty()) return ModelCorrelation{0.0, Method::mc, 0.0};
  if (n < 2) throw std::invalid_argument("correlation_mc: n must be >= 2");
  const std::vector<double> cum = cumulative_weights(f);
  const double mass = f.mass();
  MeanAccumulator acc;
  for (std::int64_t i = 0; i < n; ++i) {
    const double xi = rng.uniform() * cum.back();
    const DistributionTerm& t = f.terms()[pick_term(cum, xi)];
    const UnitVector u = sample_uniform_hemisphere(signed_axis(t.axis_u, t.sign_u), rng);
    const UnitVector v = sample_uniform_hemisphere(signed_axis(t.axis_v, t.sign_v), rng);
    acc.add(dot(u, n_a) * dot(v, n_b));
  }
  const Estimate est = mean_estimate(acc, n, mass);
  return ModelCorrelation{est.value, Method::mc, est.std_error};
}

ModelCorrelation correlation_mc(const PolarizationDistribution& f,
                                const UnitVector& n_a, const UnitVector& n_b,
                                std::int64_t n, std::uint64_t seed, int n_workers) {
  if (f.empty()) return ModelCorrelation{0.0, Method::mc, 0.0};
  if (n < 2) throw std::invalid_argument("correlation_mc: n must be >= 2");
  if (n_workers < 1) throw std::invalid_argument("correlation_mc: n_workers must be >= 1");
  const int workers = static_cast<int>(std::min<std::int64_t>(n_workers, n));
  const std::vector<double> cum = cumulative_weights(f);
  std::vector<MeanAccumulator> partial(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::int64_t base = n / workers;
  const std::int64_t extra = n % workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t count = base + (w < extra ? 1 : 0);
    pool.emplace_back([&, w, count] {
      RngStream rng(seed, static_cast<std::uint64_t>(w));
      MeanAccumulator acc;
      for (std::int64_t i = 0; i < count; ++i) {
        const double xi = rng.uniform() * cum.back();
        const DistributionTerm& t = f.terms()[pick_term(cum, xi)];
        const UnitVector u =
            sample_uniform_hemisphere(signed_axis(t.axis_u, t.sign_u), rng);
        const UnitVector v =
            sample_uniform_hemisphere(signed_axis(t.axis_v, t.sign_v), rng);
        acc.add(dot(u, n_a) * dot(v, n_b));
      }
      partial[w] = acc;
    });
  }
  for (auto& t : pool) t.join();
  MeanAccumulator total;
  for (const MeanAccumulator& acc : partial) {
    total.sum += acc.sum;
    total.sum_sq += acc.sum_sq;
  }
  const Estimate est = mean_estimate(total, n, f.mass());
  return ModelCorrelation{est.value, Method::mc, est.std_error};
}

std::pair<Estimate, Estimate> malus_grid(const UnitVector& u, const UnitVector& v,
                                         const UnitVector& n_a, const UnitVector& n_b,
                                         int n_theta) {
  const auto side_average = [n_theta](const UnitVector& pol, const UnitVector& setting) {
    const double val = kInvPi * integrate_hemisphere_grid(
                                    pol,
                                    [&pol, &setting](const UnitVector& lambda) {
                                      return dot(lambda, pol) * outcome(setting, lambda);
                                    },
                                    n_theta);
    return Estimate{val, 0.0, static_cast<std::int64_t>(n_theta) * 2 * n_theta};
  };
  return {side_average(u, n_a), side_average(v, n_b)};
}

std::pair<Estimate, Estimate> malus_mc(const UnitVector& u, const UnitVector& v,
                                       const UnitVector& n_a, const UnitVector& n_b,
                                       std::int64_t n, RngStream& rng) {
  if (n < 2) throw std::invalid_argument("malus_mc: n must be >= 2");
  MeanAccumulator acc_a;
  MeanAccumulator acc_b;
  for (std::int64_t i = 0; i < n; ++i) {
    acc_a.add(outcome(n_a, sample_cosine_hemisphere(u, rng)));
    acc_b.add(outcome(n_b, sample_cosine_hemisphere(v, rng)));
  }
  return {mean_estimate(acc_a, n, 1.0), mean_estimate(acc_b, n, 1.0)};
}

double ensemble_marginal(const PolarizationDistribution& f,
                         const UnitVector& setting, Side side) {
  // Per term the projected sphere factor gives sign * (setting . axis) and
  // the other factor integrates to 2.
  double m = 0.0;
  for (const DistributionTerm& t : f.terms()) {
    const UnitVector& axis = (side == Side::A) ? t.axis_u : t.axis_v;
    const Sign sign = (side == Side::A) ? t.sign_u : t.sign_v;
    m += 2.0 * t.weight * sign_value(sign) * dot(setting, axis);
  }
  return m;
}

double ensemble_marginal_grid(const PolarizationDistribution& f,
                              const UnitVector& setting, Side side, int n_theta) {
  double m = 0.0;
  for (const DistributionTerm& t : f.terms()) {
    const UnitVector pole_proj =
        (side == Side::A) ? signed_axis(t.axis_u, t.sign_u) : signed_axis(t.axis_v, t.sign_v);
    const UnitVector pole_flat =
        (side == Side::A) ? signed_axis(t.axis_v, t.sign_v) : signed_axis(t.axis_u, t.sign_u);
    const double proj = projected_hemisphere_integral(pole_proj, setting, n_theta);
    const double flat = kInvPi * integrate_hemisphere_grid(
                                     pole_flat, [](const UnitVector&) { return 1.0; },
                                     n_theta);
    m += t.weight * proj * flat;
  }
  return m;
}

}  // namespace kshv
