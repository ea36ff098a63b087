// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "kshv/inequalities.hpp"

using namespace kshv;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;
}  // namespace

TEST_SUITE("inequalities") {

TEST_CASE("dichotomic identity holds on all four corners") {
  for (int a : {-1, 1}) {
    for (int b : {-1, 1}) {
      const auto [lhs, mid, rhs] = dichotomic_identity(a, b);
      CHECK(lhs == mid);
      CHECK(mid == rhs);
      CHECK(mid == doctest::Approx(static_cast<double>(a * b)));
    }
  }
  CHECK_THROWS(dichotomic_identity(0, 1));
  CHECK_THROWS(dichotomic_identity(1, 2));
}

TEST_CASE("subensemble bounds: saturated cases") {
  const UnitVector u = UnitVector::normalized(Vec3{0.3, 0.2, 0.93});
  const UnitVector v = UnitVector::normalized(Vec3{-0.4, 0.7, 0.59});
  const SubensembleBounds aligned = subensemble_bounds(u, v, u, v);
  CHECK(aligned.lower == doctest::Approx(1.0));
  CHECK(aligned.mid == doctest::Approx(1.0));
  CHECK(aligned.upper == doctest::Approx(1.0));

  const SubensembleBounds anti = subensemble_bounds(u, v, u, -v);
  CHECK(anti.lower == doctest::Approx(-1.0));
  CHECK(anti.mid == doctest::Approx(-1.0));
  CHECK(anti.upper == doctest::Approx(-1.0));
}

TEST_CASE("subensemble bounds are ordered on random quadruples") {
  RngStream rng(47, 0);
  for (int i = 0; i < 10000; ++i) {
    const SubensembleBounds sb =
        subensemble_bounds(sample_uniform_sphere(rng), sample_uniform_sphere(rng),
                           sample_uniform_sphere(rng), sample_uniform_sphere(rng));
    REQUIRE(sb.lower <= sb.mid + 1e-14);
    REQUIRE(sb.mid <= sb.upper + 1e-14);
  }
}

TEST_CASE("the bound function") {
  CHECK(leggett_bound(0.0) == doctest::Approx(4.0));
  CHECK(leggett_bound(kPi) == doctest::Approx(4.0 - 4.0 / kPi).epsilon(1e-14));
  const double phi_star = 2.0 * std::asin(1.0 / (2.0 * kPi));
  CHECK(leggett_bound(phi_star) ==
        doctest::Approx(4.0 - 2.0 / (kPi * kPi)).epsilon(1e-14));
  CHECK_THROWS(leggett_bound(-0.1));
  CHECK_THROWS(leggett_bound(kPi + 0.1));
}

TEST_CASE("left-hand side with model correlations") {
  const CorrelationFn model = model_singlet_correlation();
  CHECK(leggett_lhs(model, 0.0) == doctest::Approx(4.0).epsilon(1e-13));
  // For E = -cos(relative angle) the left-hand side is 2 (1 + cos phi).
  for (double deg : {10.0, 20.0, 45.0, 60.0, 89.0}) {
    const double phi = deg * kDeg;
    CHECK(leggett_lhs(model, phi) ==
          doctest::Approx(2.0 * (1.0 + std::cos(phi))).epsilon(1e-12));
  }
  // Documented sample points: violation at 20 degrees, none at 60.
  CHECK(leggett_lhs(model, 20 * kDeg) > leggett_bound(20 * kDeg));
  CHECK(leggett_lhs(model, 60 * kDeg) < leggett_bound(60 * kDeg));
}

TEST_CASE("model and quantum predictions coincide for the singlet") {
  const CorrelationFn model = model_singlet_correlation();
  const CorrelationFn qm = qm_state_correlation(bell_state(BellKind::psi_minus));
  for (double deg : {5.0, 18.0, 37.0, 72.0}) {
    CHECK(std::abs(leggett_lhs(model, deg * kDeg) - leggett_lhs(qm, deg * kDeg)) < 1e-12);
  }
  const ChshSettings s = chsh_standard_settings();
  CHECK(std::abs(chsh(model, s.a, s.a_prime, s.b, s.b_prime) -
                 chsh(qm, s.a, s.a_prime, s.b, s.b_prime)) < 1e-12);
}

TEST_CASE("scan locates the violation window and its peak") {
  // Oracle by direct search: margin(s) = (4/pi) s - 4 s^2 with
  // s = sin(phi/2), maximal margin 1/pi^2 at s = 1/(2 pi), zero crossing
  // at s = 1/pi.
  double best_margin = 0.0;
  for (int i = 0; i <= 100000; ++i) {
    const double s = i * (1.0 / 100000.0);
    best_margin = std::max(best_margin, (4.0 / kPi) * s - 4.0 * s * s);
  }
  CHECK(best_margin == doctest::Approx(1.0 / (kPi * kPi)).epsilon(1e-8));

  std::vector<double> phis;
  for (int deg = 1; deg <= 89; ++deg) phis.push_back(deg * kDeg);
  const std::vector<InequalityReport> reports =
      leggett_scan(model_singlet_correlation(), phis);
  REQUIRE(reports.size() == phis.size());

  const double edge = 2.0 * std::asin(1.0 / kPi);  // about 37.1 degrees
  for (const InequalityReport& r : reports) {
    CHECK(r.violated == (r.phi < edge));
    CHECK(r.margin == doctest::Approx(r.lhs - r.bound));
    REQUIRE(r.correlations.size() == 3);
    CHECK(r.correlations[0].setting.label == "E11");
    CHECK(r.correlations[1].setting.label == "E22");
    CHECK(r.correlations[2].setting.label == "E23");
  }
  const ScanSummary summary = summarize_scan(reports);
  CHECK(summary.any_violation);
  CHECK(std::abs(summary.violation_upper_edge - edge) < 1.0 * kDeg);
  CHECK(std::abs(summary.max_margin - best_margin) < 1e-3);
  CHECK(std::abs(summary.phi_at_max - 2.0 * std::asin(1.0 / (2 * kPi))) < 1.0 * kDeg);
}

TEST_CASE("non-contextual control never violates") {
  std::vector<double> phis;
  for (int deg = 1; deg <= 89; ++deg) phis.push_back(deg * kDeg);
  const std::vector<InequalityReport> reports =
      leggett_scan(control_correlation(unit_z()), phis);
  for (const InequalityReport& r : reports) CHECK_FALSE(r.violated);
  CHECK_FALSE(summarize_scan(reports).any_violation);
}

TEST_CASE("scan rejects an empty list") {
  CHECK_THROWS(leggett_scan(model_singlet_correlation(), {}));
}

TEST_CASE("a custom bound can be swapped in") {
  const BoundFn loose = [](double) { return 10.0; };
  const InequalityReport r = leggett_report(model_singlet_correlation(), 0.2, loose);
  CHECK(r.bound == doctest::Approx(10.0));
  CHECK_FALSE(r.violated);
}

TEST_CASE("CHSH evaluations") {
  const CorrelationFn model = model_singlet_correlation();
  const ChshSettings s = chsh_standard_settings();
  CHECK(std::abs(chsh(model, s.a, s.a_prime, s.b, s.b_prime) - 2.0 * std::numbers::sqrt2) <
        1e-12);

  // All settings equal: |E - E| + |2 E| <= 2.
  const UnitVector n = UnitVector::normalized(Vec3{0.2, 0.9, 0.4});
  CHECK(chsh(model, n, n, n, n) <= 2.0 + 1e-12);

  const CorrelationFn zero = [](const UnitVector&, const UnitVector&) { return 0.0; };
  CHECK(chsh(zero, s.a, s.a_prime, s.b, s.b_prime) == 0.0);
}

TEST_CASE("plan geometry") {
  const double phi = 0.4;
  const SettingsPlan plan = leggett_plan(phi);
  REQUIRE(plan.pairs.size() == 3);
  // Relative angle phi within each plane, aligned pair at the end.
  CHECK(dot(plan.pairs[0].a, plan.pairs[0].b) == doctest::Approx(std::cos(phi)));
  CHECK(dot(plan.pairs[1].a, plan.pairs[1].b) == doctest::Approx(std::cos(phi)));
  CHECK(dot(plan.pairs[2].a, plan.pairs[2].b) == doctest::Approx(1.0));
  // The two scan planes are orthogonal: normals z x b1 and x x b2.
  const Vec3 normal1 = cross(plan.pairs[0].a, plan.pairs[0].b);
  const Vec3 normal2 = cross(plan.pairs[1].a, plan.pairs[1].b);
  CHECK(std::abs(dot(normal1, normal2)) < 1e-14);
}

}  // TEST_SUITE
