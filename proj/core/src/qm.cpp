// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#include "kshv/qm.hpp"

#include <cmath>
#include <stdexcept>

namespace kshv {

namespace {

using C = std::complex<double>;

// Pauli matrices in the {H, V} basis (H -> +z, V -> -z).
constexpr C kSigma[3][2][2] = {
    {{C(0.0, 0.0), C(1.0, 0.0)}, {C(1.0, 0.0), C(0.0, 0.0)}},
    {{C(0.0, 0.0), C(0.0, -1.0)}, {C(0.0, 1.0), C(0.0, 0.0)}},
    {{C(1.0, 0.0), C(0.0, 0.0)}, {C(0.0, 0.0), C(-1.0, 0.0)}},
};

constexpr double kInvSqrt2 = 0.7071067811865475244;

}  // namespace

TwoQubitState::TwoQubitState(const Amplitudes& amplitudes) : amp_(amplitudes) {
  double n2 = 0.0;
  for (const C& a : amp_) n2 += std::norm(a);
  if (std::abs(n2 - 1.0) > 1e-9) {
    throw std::invalid_argument("TwoQubitState: amplitudes are not normalized");
  }
}

TwoQubitState TwoQubitState::normalized(const Amplitudes& amplitudes) {
  double n2 = 0.0;
  for (const C& a : amplitudes) n2 += std::norm(a);
  if (!(n2 > 1e-24)) {
    throw std::invalid_argument("TwoQubitState::normalized: null state");
  }
  Amplitudes scaled = amplitudes;
  const double inv = 1.0 / std::sqrt(n2);
  for (C& a : scaled) a *= inv;
  return TwoQubitState(scaled);
}

double TwoQubitState::norm_squared() const {
  double n2 = 0.0;
  for (const C& a : amp_) n2 += std::norm(a);
  return n2;
}

bool TwoQubitState::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

TwoQubitState bell_state(BellKind kind) {
  switch (kind) {
    case BellKind::psi_minus:
      return TwoQubitState({C(0), C(kInvSqrt2), C(-kInvSqrt2), C(0)});
    case BellKind::psi_plus:
      return TwoQubitState({C(0), C(kInvSqrt2), C(kInvSqrt2), C(0)});
    case BellKind::phi_plus:
      return TwoQubitState({C(kInvSqrt2), C(0), C(0), C(kInvSqrt2)});
    case BellKind::phi_minus:
      return TwoQubitState({C(-kInvSqrt2), C(0), C(0), C(kInvSqrt2)});
  }
  throw std::invalid_argument("bell_state: unknown kind");
}

CorrelationTensor::CorrelationTensor() : t_{} {}

CorrelationTensor CorrelationTensor::diagonal(double xx, double yy, double zz) {
  CorrelationTensor t;
  t(0, 0) = xx;
  t(1, 1) = yy;
  t(2, 2) = zz;
  return t;
}

CorrelationTensor CorrelationTensor::from_rows(const std::array<double, 9>& row_major) {
  CorrelationTensor t;
  t.t_ = row_major;
  return t;
}

CorrelationTensor correlation_tensor(const TwoQubitState& state) {
  if (!state.is_normalized(1e-12)) {
    throw std::invalid_argument("correlation_tensor: state must be normalized");
  }
  const auto& amp = state.amplitudes();
  CorrelationTensor t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      C acc(0.0, 0.0);
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
          for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s)
              acc += std::conj(amp[static_cast<std::size_t>(2 * p + q)]) *
                     kSigma[i][p][r] * kSigma[j][q][s] *
                     amp[static_cast<std::size_t>(2 * r + s)];
      t(i, j) = acc.real();
    }
  }
  return t;
}

double tensor_correlation(const CorrelationTensor& t, const UnitVector& n_a,
                          const UnitVector& n_b) {
  const double a[3] = {n_a.x(), n_a.y(), n_a.z()};
  const double b[3] = {n_b.x(), n_b.y(), n_b.z()};
  double e = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e += a[i] * t(i, j) * b[j];
  return e;
}

double qm_correlation(const TwoQubitState& state, const UnitVector& n_a,
                      const UnitVector& n_b) {
  return tensor_correlation(correlation_tensor(state), n_a, n_b);
}

CorrelationTensor mix_tensors(
    const std::vector<std::pair<double, CorrelationTensor>>& components) {
  double total = 0.0;
  for (const auto& [w, t] : components) {
    if (w < 0.0) throw std::invalid_argument("mix_tensors: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("mix_tensors: weights must sum to one");
  }
  CorrelationTensor out;
  for (const auto& [w, t] : components)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out(i, j) += w * t(i, j);
  return out;
}

}  // namespace kshv
