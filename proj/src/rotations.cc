#include "sphrep/rotations.h"

#include <algorithm>
#include <stdexcept>

namespace sphrep {

Vec3 normalized(Vec3 v) {
  double n = norm(v);
  if (n < 1e-12) throw std::domain_error("normalized: zero vector");
  return (1.0 / n) * v;
}

double angle_modulus(GroupFlavor f) { return f == GroupFlavor::SO3 ? kTwoPi : kFourPi; }

double reduce_angle(double x, double modulus) {
  double y = std::fmod(x, modulus);
  if (y < 0) y += modulus;
  if (y >= modulus - kWrapEps) y = 0;
  if (y < 0) y = 0;
  return y;
}

Rotation3 rot3_identity() { return Rotation3{}; }

static void check_unit(Vec3 axis) {
  if (std::abs(norm(axis) - 1.0) > kUnitEps)
    throw std::domain_error("axis must be a unit vector");
}

Rotation3 rot3_from_axis_angle(Vec3 axis, double angle) {
  check_unit(axis);
  double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
  double ux = axis.x, uy = axis.y, uz = axis.z;
  Rotation3 r;
  r.m = {c + t * ux * ux,      t * ux * uy - s * uz, t * ux * uz + s * uy,
         t * ux * uy + s * uz, c + t * uy * uy,      t * uy * uz - s * ux,
         t * ux * uz - s * uy, t * uy * uz + s * ux, c + t * uz * uz};
  return r;
}

Vec3 apply(const Rotation3& r, Vec3 v) {
  const auto& m = r.m;
  return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
          m[3] * v.x + m[4] * v.y + m[5] * v.z,
          m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

Rotation3 compose(const Rotation3& a, const Rotation3& b) {
  Rotation3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += a.m[3 * i + k] * b.m[3 * k + j];
      r.m[3 * i + j] = s;
    }
  return r;
}

Rotation3 inverse(const Rotation3& r) {
  Rotation3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.m[3 * i + j] = r.m[3 * j + i];
  return t;
}

Spin spin_identity() { return Spin{}; }

Spin spin_from_axis_angle(Vec3 axis, double angle) {
  check_unit(axis);
  double h = 0.5 * angle, s = std::sin(h);
  return {std::cos(h), s * axis.x, s * axis.y, s * axis.z};
}

Spin compose(const Spin& a, const Spin& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Spin inverse(const Spin& q) { return {q.w, -q.x, -q.y, -q.z}; }

Spin negate(const Spin& q) { return {-q.w, -q.x, -q.y, -q.z}; }

Rotation3 project(const Spin& q) {
  double w = q.w, x = q.x, y = q.y, z = q.z;
  Rotation3 r;
  r.m = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
         2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
         2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
  return r;
}

static Spin spin_normalized(Spin q) {
  double n = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
  return {q.w / n, q.x / n, q.y / n, q.z / n};
}

// Deterministic sign rule: scalar part positive; within the tie zone the first
// imaginary component of magnitude above the tie threshold decides.
static Spin canonical_sign(Spin q) {
  double s = 0;
  if (q.w > kLiftTieEps) s = 1;
  else if (q.w < -kLiftTieEps) s = -1;
  else {
    for (double c : {q.x, q.y, q.z}) {
      if (std::abs(c) > kLiftTieEps) { s = c > 0 ? 1 : -1; break; }
    }
    if (s == 0) s = 1;
  }
  return s < 0 ? negate(q) : q;
}

Spin lift(const Rotation3& r) {
  const auto& m = r.m;
  double m00 = m[0], m01 = m[1], m02 = m[2];
  double m10 = m[3], m11 = m[4], m12 = m[5];
  double m20 = m[6], m21 = m[7], m22 = m[8];
  double tr = m00 + m11 + m22;
  Spin q;
  if (tr > m00 && tr > m11 && tr > m22) {
    double s = std::sqrt(std::max(0.0, tr + 1.0)) * 2;
    q = {0.25 * s, (m21 - m12) / s, (m02 - m20) / s, (m10 - m01) / s};
  } else if (m00 >= m11 && m00 >= m22) {
    double s = std::sqrt(std::max(0.0, 1.0 + m00 - m11 - m22)) * 2;
    q = {(m21 - m12) / s, 0.25 * s, (m01 + m10) / s, (m02 + m20) / s};
  } else if (m11 >= m22) {
    double s = std::sqrt(std::max(0.0, 1.0 + m11 - m00 - m22)) * 2;
    q = {(m02 - m20) / s, (m01 + m10) / s, 0.25 * s, (m12 + m21) / s};
  } else {
    double s = std::sqrt(std::max(0.0, 1.0 + m22 - m00 - m11)) * 2;
    q = {(m10 - m01) / s, (m02 + m20) / s, (m12 + m21) / s, 0.25 * s};
  }
  return canonical_sign(spin_normalized(q));
}

AxisAngle canonical_axis_angle(const Rotation3& r) {
  Spin q = lift(r);
  Vec3 im{q.x, q.y, q.z};
  double n = norm(im);
  AxisAngle out;
  if (n < 1e-9) return out;  // identity: angle 0, axis (0,0,1)
  out.angle = std::min(kPi, 2.0 * std::atan2(n, q.w));
  out.axis = (1.0 / n) * im;
  return out;
}

double rotation_distance(const Rotation3& a, const Rotation3& b) {
  double s = 0;
  for (int i = 0; i < 9; ++i) {
    double d = a.m[i] - b.m[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double rotation_distance(const Spin& a, const Spin& b) {
  double dw = a.w - b.w, dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
}

}  // namespace sphrep
