// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kshv/geometry.hpp"
#include "kshv/qm.hpp"
#include "kshv/two_qubit.hpp"

namespace kshv {

struct SettingPair {
  std::string label;
  UnitVector a;
  UnitVector b;
};

// Fixed-settings measurement plan; phi is the relative polarizer angle the
// plan was built from, when there is one.
struct SettingsPlan {
  std::vector<SettingPair> pairs;
  std::optional<double> phi;
};

// Plan behind the Leggett-type left-hand side: pairs E11 and E22 put a
// relative angle phi between the polarizers in two mutually orthogonal
// planes (x-z and x-y); E23 uses aligned settings.
SettingsPlan leggett_plan(double phi);

// Correlation function over setting pairs; must be pure so scans can run
// concurrently.
using CorrelationFn = std::function<double(const UnitVector& a, const UnitVector& b)>;
using BoundFn = std::function<double(double phi)>;

/// The three equal faces of the dichotomic identity
/// (-1 + |a+b|, a*b, 1 - |a-b|) for a, b in {-1, +1}.
std::array<double, 3> dichotomic_identity(int a, int b);

struct SubensembleBounds {
  double lower = 0.0;
  double mid = 0.0;
  double upper = 0.0;
};

// Averaging the identity over a subensemble with definite polarizations
// (u, v) bounds the pair average by the single-side averages:
// -1 + |A+B| <= A*B <= 1 - |A-B| with A = u.a and B = v.b.
SubensembleBounds subensemble_bounds(const UnitVector& u, const UnitVector& v,
                                     const UnitVector& n_a, const UnitVector& n_b);

// Leggett-type bound 4 - (4/pi)|sin(phi/2)| for phi in [0, pi]. This is the
// explicit bound of the photonic test the model is measured against; any
// alternative convention can be swapped in through the BoundFn hooks below.
double leggett_bound(double phi);

/// |E11(phi) + E23(0)| + |E22(phi) + E23(0)| on the plan above.
double leggett_lhs(const CorrelationFn& correlation, double phi);

struct SettingCorrelation {
  SettingPair setting;
  double value = 0.0;
};

struct InequalityReport {
  double phi = 0.0;
  double lhs = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // lhs - bound; positive means violated
  bool violated = false;
  std::vector<SettingCorrelation> correlations;  // the audited plan
};

InequalityReport leggett_report(const CorrelationFn& correlation, double phi,
                                const BoundFn& bound = {});

/// One report per phi, in input order; phis must be nonempty.
std::vector<InequalityReport> leggett_scan(const CorrelationFn& correlation,
                                           const std::vector<double>& phis,
                                           const BoundFn& bound = {});

struct ScanSummary {
  bool any_violation = false;
  double max_margin = 0.0;
  double phi_at_max = 0.0;
  double violation_upper_edge = 0.0;  // largest violating phi, 0 if none
};

ScanSummary summarize_scan(const std::vector<InequalityReport>& reports);

/// |E(a,b) - E(a,b')| + |E(a',b) + E(a',b')|.
double chsh(const CorrelationFn& correlation, const UnitVector& a,
            const UnitVector& a_prime, const UnitVector& b,
            const UnitVector& b_prime);

struct ChshSettings {
  UnitVector a;
  UnitVector a_prime;
  UnitVector b;
  UnitVector b_prime;
};

/// Coplanar polarizers at 0, 90, 45 and 135 degrees; the singlet gives
/// 2*sqrt(2) here.
ChshSettings chsh_standard_settings();

// Closed-form correlation functions for plugging into the evaluators.
CorrelationFn model_singlet_correlation();
CorrelationFn model_tensor_correlation(const CorrelationTensor& t);
CorrelationFn control_correlation(const UnitVector& axis);
CorrelationFn qm_state_correlation(const TwoQubitState& state);

}  // namespace kshv
