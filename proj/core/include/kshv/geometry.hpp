// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "kshv/rng.hpp"

namespace kshv {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double s, const Vec3& a) {
  return {s * a.x, s * a.y, s * a.z};
}
constexpr Vec3 operator*(const Vec3& a, double s) { return s * a; }
constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const Vec3& a);

// A direction on the unit sphere. The same type serves as hidden variable,
// photon polarization and polarizer setting. Construction and rotation keep
// x^2 + y^2 + z^2 within 1e-12 of one.
class UnitVector {
 public:
  UnitVector();  // +z
  UnitVector(double x, double y, double z);
  explicit UnitVector(const Vec3& v);

  /// Scales an arbitrary non-null vector onto the sphere.
  static UnitVector normalized(const Vec3& v);

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  const Vec3& vec() const { return v_; }

  UnitVector operator-() const;

 private:
  Vec3 v_;
};

inline double dot(const UnitVector& a, const UnitVector& b) {
  return dot(a.vec(), b.vec());
}
inline double dot(const UnitVector& a, const Vec3& b) { return dot(a.vec(), b); }
inline double dot(const Vec3& a, const UnitVector& b) { return dot(a, b.vec()); }
inline Vec3 cross(const UnitVector& a, const UnitVector& b) {
  return cross(a.vec(), b.vec());
}

UnitVector unit_x();
UnitVector unit_y();
UnitVector unit_z();

/// Standard spherical embedding (sin t cos p, sin t sin p, cos t).
/// Requires theta in [0, pi] and phi in [0, 2*pi).
UnitVector from_spherical(double theta, double phi);

// Proper rotation of R^3, stored row-major.
class Rotation3 {
 public:
  Rotation3();  // identity
  static Rotation3 from_columns(const Vec3& cx, const Vec3& cy, const Vec3& cz);

  Vec3 apply(const Vec3& v) const;
  UnitVector apply(const UnitVector& u) const;

  double entry(int row, int col) const { return m_[3 * row + col]; }
  double determinant() const;

 private:
  std::array<double, 9> m_;
};

/// Proper rotation mapping (0,0,1) to `pole`. The frame seed is fixed, so
/// the result is deterministic; the antipodal pole maps to the rotation by
/// pi about the x axis.
Rotation3 rotation_to_pole(const UnitVector& pole);

/// Uniform with respect to the surface measure.
UnitVector sample_uniform_sphere(RngStream& rng);

/// Uniform on the closed hemisphere { v : v . pole >= 0 }.
UnitVector sample_uniform_hemisphere(const UnitVector& pole, RngStream& rng);

/// Density (v . pole) / pi on the pole's hemisphere, zero elsewhere.
/// Exact inverse-CDF sampling (cos t = sqrt(xi)) in the pole frame.
UnitVector sample_cosine_hemisphere(const UnitVector& pole, RngStream& rng);

}  // namespace kshv
