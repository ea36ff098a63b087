// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "kshv/geometry.hpp"

namespace kshv {

// Two-qubit pure state in the product basis {HH, HV, VH, VV}, with H and V
// identified with the +z / -z Bloch axes. This is the quantum-mechanical
// reference the hidden-variable model is compared against.
class TwoQubitState {
 public:
  using Amplitudes = std::array<std::complex<double>, 4>;

  explicit TwoQubitState(const Amplitudes& amplitudes);

  /// Rescales arbitrary non-null amplitudes to norm one.
  static TwoQubitState normalized(const Amplitudes& amplitudes);

  const Amplitudes& amplitudes() const { return amp_; }
  std::complex<double> amplitude(int i) const { return amp_[static_cast<std::size_t>(i)]; }

  double norm_squared() const;
  bool is_normalized(double tol = 1e-12) const;

 private:
  Amplitudes amp_;
};

enum class BellKind { psi_minus, psi_plus, phi_plus, phi_minus };

/// The four Bell states; psi_minus is the singlet.
TwoQubitState bell_state(BellKind kind);

// 3x3 real matrix T with E(a, b) = a^T T b. Bell states have diagonal T
// with entries +-1.
class CorrelationTensor {
 public:
  CorrelationTensor();  // zero
  static CorrelationTensor diagonal(double xx, double yy, double zz);
  static CorrelationTensor from_rows(const std::array<double, 9>& row_major);

  double operator()(int i, int j) const { return t_[static_cast<std::size_t>(3 * i + j)]; }
  double& operator()(int i, int j) { return t_[static_cast<std::size_t>(3 * i + j)]; }

  const std::array<double, 9>& data() const { return t_; }

 private:
  std::array<double, 9> t_;
};

/// T_ij = <psi| sigma_i x sigma_j |psi> by direct 4x4 linear algebra.
/// Throws if the state is not normalized.
CorrelationTensor correlation_tensor(const TwoQubitState& state);

/// a^T T b.
double tensor_correlation(const CorrelationTensor& t, const UnitVector& n_a,
                          const UnitVector& n_b);

/// Joint correlation <psi| (n_a . sigma) x (n_b . sigma) |psi>.
double qm_correlation(const TwoQubitState& state, const UnitVector& n_a,
                      const UnitVector& n_b);

/// Convex mixture of tensors; weights must be nonnegative and sum to one.
CorrelationTensor mix_tensors(
    const std::vector<std::pair<double, CorrelationTensor>>& components);

}  // namespace kshv
