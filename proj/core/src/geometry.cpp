// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#include "kshv/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kshv {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

UnitVector::UnitVector() : v_{0.0, 0.0, 1.0} {}

UnitVector::UnitVector(double x, double y, double z) : UnitVector(Vec3{x, y, z}) {}

UnitVector::UnitVector(const Vec3& v) {
  const double n = norm(v);
  if (std::abs(n - 1.0) > 1e-6) {
    throw std::invalid_argument("UnitVector: vector is not unit length");
  }
  // Rescale only when the deviation threatens the 1e-12 invariant, so that
  // already-unit components pass through bit for bit.
  v_ = (std::abs(n - 1.0) > 1e-12) ? (1.0 / n) * v : v;
}

UnitVector UnitVector::normalized(const Vec3& v) {
  const double n = norm(v);
  if (!(n > 1e-12)) {
    throw std::invalid_argument("UnitVector::normalized: vector too close to zero");
  }
  return UnitVector((1.0 / n) * v);
}

UnitVector UnitVector::operator-() const { return UnitVector(-v_); }

UnitVector unit_x() { return UnitVector(1.0, 0.0, 0.0); }
UnitVector unit_y() { return UnitVector(0.0, 1.0, 0.0); }
UnitVector unit_z() { return UnitVector(0.0, 0.0, 1.0); }

UnitVector from_spherical(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("from_spherical: theta outside [0, pi]");
  }
  if (!(phi >= 0.0 && phi < kTwoPi)) {
    throw std::invalid_argument("from_spherical: phi outside [0, 2*pi)");
  }
  const double st = std::sin(theta);
  return UnitVector(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
}

Rotation3::Rotation3() : m_{1, 0, 0, 0, 1, 0, 0, 0, 1} {}

Rotation3 Rotation3::from_columns(const Vec3& cx, const Vec3& cy, const Vec3& cz) {
  Rotation3 r;
  r.m_ = {cx.x, cy.x, cz.x, cx.y, cy.y, cz.y, cx.z, cy.z, cz.z};
  return r;
}

Vec3 Rotation3::apply(const Vec3& v) const {
  return {m_[0] * v.x + m_[1] * v.y + m_[2] * v.z,
          m_[3] * v.x + m_[4] * v.y + m_[5] * v.z,
          m_[6] * v.x + m_[7] * v.y + m_[8] * v.z};
}

UnitVector Rotation3::apply(const UnitVector& u) const {
  return UnitVector(apply(u.vec()));
}

double Rotation3::determinant() const {
  return m_[0] * (m_[4] * m_[8] - m_[5] * m_[7]) -
         m_[1] * (m_[3] * m_[8] - m_[5] * m_[6]) +
         m_[2] * (m_[3] * m_[7] - m_[4] * m_[6]);
}

Rotation3 rotation_to_pole(const UnitVector& pole) {
  const Vec3 p = pole.vec();
  // Fixed seed vector keeps the frame deterministic. For pole = -z this
  // construction reduces to diag(1, -1, -1), a pi rotation about x.
  const Vec3 h = (std::abs(p.x) <= 0.9) ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 c1 = h - dot(h, p) * p;
  c1 = (1.0 / norm(c1)) * c1;
  const Vec3 c2 = cross(p, c1);
  return Rotation3::from_columns(c1, c2, p);
}

UnitVector sample_uniform_sphere(RngStream& rng) {
  const double z = 1.0 - 2.0 * rng.uniform();
  const double phi = kTwoPi * rng.uniform();
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return UnitVector(s * std::cos(phi), s * std::sin(phi), z);
}

UnitVector sample_uniform_hemisphere(const UnitVector& pole, RngStream& rng) {
  const double z = rng.uniform();
  const double phi = kTwoPi * rng.uniform();
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  const Vec3 local{s * std::cos(phi), s * std::sin(phi), z};
  return UnitVector(rotation_to_pole(pole).apply(local));
}

UnitVector sample_cosine_hemisphere(const UnitVector& pole, RngStream& rng) {
  const double c = std::sqrt(rng.uniform());
  const double phi = kTwoPi * rng.uniform();
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  const Vec3 local{s * std::cos(phi), s * std::sin(phi), c};
  return UnitVector(rotation_to_pole(pole).apply(local));
}

}  // namespace kshv
