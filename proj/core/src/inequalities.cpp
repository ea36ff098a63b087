// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#include "kshv/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace kshv {

namespace {
constexpr double kPi = std::numbers::pi;
}

SettingsPlan leggett_plan(double phi) {
  if (!(phi >= 0.0 && phi <= kPi)) {
    throw std::invalid_argument("leggett_plan: phi outside [0, pi]");
  }
  const UnitVector a1 = unit_z();
  const UnitVector b1(std::sin(phi), 0.0, std::cos(phi));  // x-z plane
  const UnitVector a2 = unit_x();
  const UnitVector b2(std::cos(phi), std::sin(phi), 0.0);  // x-y plane
  const UnitVector b3 = unit_x();                          // aligned with a2
  SettingsPlan plan;
  plan.phi = phi;
  plan.pairs = {{"E11", a1, b1}, {"E22", a2, b2}, {"E23", a2, b3}};
  return plan;
}

std::array<double, 3> dichotomic_identity(int a, int b) {
  if ((a != 1 && a != -1) || (b != 1 && b != -1)) {
    throw std::invalid_argument("dichotomic_identity: arguments must be +-1");
  }
  const double da = a;
  const double db = b;
  return {-1.0 + std::abs(da + db), da * db, 1.0 - std::abs(da - db)};
}

SubensembleBounds subensemble_bounds(const UnitVector& u, const UnitVector& v,
                                     const UnitVector& n_a, const UnitVector& n_b) {
  const double abar = dot(u, n_a);
  const double bbar = dot(v, n_b);
  return {-1.0 + std::abs(abar + bbar), abar * bbar, 1.0 - std::abs(abar - bbar)};
}

double leggett_bound(double phi) {
  if (!(phi >= 0.0 && phi <= kPi)) {
    throw std::invalid_argument("leggett_bound: phi outside [0, pi]");
  }
  return 4.0 - (4.0 / kPi) * std::abs(std::sin(0.5 * phi));
}

double leggett_lhs(const CorrelationFn& correlation, double phi) {
  const SettingsPlan plan = leggett_plan(phi);
  const double e11 = correlation(plan.pairs[0].a, plan.pairs[0].b);
  const double e22 = correlation(plan.pairs[1].a, plan.pairs[1].b);
  const double e23 = correlation(plan.pairs[2].a, plan.pairs[2].b);
  return std::abs(e11 + e23) + std::abs(e22 + e23);
}

InequalityReport leggett_report(const CorrelationFn& correlation, double phi,
                                const BoundFn& bound) {
  const SettingsPlan plan = leggett_plan(phi);
  InequalityReport rep;
  rep.phi = phi;
  rep.correlations.reserve(plan.pairs.size());
  for (const SettingPair& p : plan.pairs) {
    rep.correlations.push_back({p, correlation(p.a, p.b)});
  }
  const double e11 = rep.correlations[0].value;
  const double e22 = rep.correlations[1].value;
  const double e23 = rep.correlations[2].value;
  rep.lhs = std::abs(e11 + e23) + std::abs(e22 + e23);
  rep.bound = bound ? bound(phi) : leggett_bound(phi);
  rep.margin = rep.lhs - rep.bound;
  rep.violated = rep.margin > 0.0;
  return rep;
}

std::vector<InequalityReport> leggett_scan(const CorrelationFn& correlation,
                                           const std::vector<double>& phis,
                                           const BoundFn& bound) {
  if (phis.empty()) throw std::invalid_argument("leggett_scan: empty phi list");
  std::vector<InequalityReport> reports(phis.size());
  const std::size_t n = phis.size();
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, (n + 63) / 64);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      reports[i] = leggett_report(correlation, phis[i], bound);
    }
    return reports;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        reports[i] = leggett_report(correlation, phis[i], bound);
      }
    });
  }
  for (auto& t : pool) t.join();
  return reports;
}

ScanSummary summarize_scan(const std::vector<InequalityReport>& reports) {
  ScanSummary s;
  bool first = true;
  for (const InequalityReport& r : reports) {
    if (first || r.margin > s.max_margin) {
      s.max_margin = r.margin;
      s.phi_at_max = r.phi;
      first = false;
    }
    if (r.violated) {
      s.any_violation = true;
      s.violation_upper_edge = std::max(s.violation_upper_edge, r.phi);
    }
  }
  return s;
}

double chsh(const CorrelationFn& correlation, const UnitVector& a,
            const UnitVector& a_prime, const UnitVector& b,
            const UnitVector& b_prime) {
  return std::abs(correlation(a, b) - correlation(a, b_prime)) +
         std::abs(correlation(a_prime, b) + correlation(a_prime, b_prime));
}

ChshSettings chsh_standard_settings() {
  const double r = std::numbers::sqrt2 / 2.0;
  return {UnitVector(0, 0, 1), UnitVector(1, 0, 0), UnitVector(r, 0, r),
          UnitVector(r, 0, -r)};
}

CorrelationFn model_singlet_correlation() {
  return [](const UnitVector& a, const UnitVector& b) {
    return correlation_closed(singlet_distribution(a, b), a, b);
  };
}

CorrelationFn model_tensor_correlation(const CorrelationTensor& t) {
  const PolarizationDistribution f = distribution_from_tensor(t);
  return [f](const UnitVector& a, const UnitVector& b) {
    return correlation_closed(f, a, b);
  };
}

CorrelationFn control_correlation(const UnitVector& axis) {
  const PolarizationDistribution f = fixed_axis_distribution(axis);
  return [f](const UnitVector& a, const UnitVector& b) {
    return correlation_closed(f, a, b);
  };
}

CorrelationFn qm_state_correlation(const TwoQubitState& state) {
  const CorrelationTensor t = correlation_tensor(state);
  return [t](const UnitVector& a, const UnitVector& b) {
    return tensor_correlation(t, a, b);
  };
}

}  // namespace kshv
