#pragma once

#include <array>
#include <cmath>

// Axis-angle rotations of the 2-sphere and their spin (unit quaternion)
// double cover. Conventions used throughout the library:
//  - rotations act on column vectors, counter-clockwise when viewed from the
//    tip of the axis (right-handed);
//  - compose(a, b) applies b first;
//  - SO3 angles live in [0, 2*pi), spin angles in [0, 4*pi).

namespace sphrep {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kFourPi = 4.0 * kPi;

// Reduction guard: values within this of the modulus wrap to zero.
inline constexpr double kWrapEps = 1e-12;
// Unit-norm validation tolerance for axis inputs.
inline constexpr double kUnitEps = 1e-9;
// Scalar-part tie zone for the canonical lift sign rule.
inline constexpr double kLiftTieEps = 1e-6;

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator-(Vec3 v) { return {-v.x, -v.y, -v.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }
Vec3 normalized(Vec3 v);  // domain error on (near-)zero input

// 3x3 rotation matrix, row major: m[3*row + col].
struct Rotation3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};
};

// Unit quaternion w + x*i + y*j + z*k.
struct Spin {
  double w = 1, x = 0, y = 0, z = 0;
};

enum class GroupFlavor { SO3, SU2 };

// Modulus of rotation angles for a flavor: 2*pi for SO3, 4*pi for SU2.
double angle_modulus(GroupFlavor f);
// Reduce x into [0, modulus) with a 1e-12 wrap guard at the seam.
double reduce_angle(double x, double modulus);

Rotation3 rot3_identity();
Rotation3 rot3_from_axis_angle(Vec3 axis, double angle);  // axis unit within 1e-9
Vec3 apply(const Rotation3& r, Vec3 v);
Rotation3 compose(const Rotation3& a, const Rotation3& b);  // apply b first
Rotation3 inverse(const Rotation3& r);

Spin spin_identity();
Spin spin_from_axis_angle(Vec3 axis, double angle);  // cos(a/2) + sin(a/2) axis
Spin compose(const Spin& a, const Spin& b);          // quaternion product, b first
Spin inverse(const Spin& q);
Spin negate(const Spin& q);  // the other sheet: rotation (-axis, 2*pi - angle)

// 2-to-1 cover: both q and -q project to the same rotation.
Rotation3 project(const Spin& q);
// Canonical section of project: scalar part >= 0, ties (|w| <= 1e-6) broken by
// the first imaginary component of magnitude > 1e-6 being positive.
Spin lift(const Rotation3& r);

struct AxisAngle {
  Vec3 axis{0, 0, 1};
  double angle = 0;  // in [0, pi]
};
// Canonical axis-angle of a rotation: angle in [0, pi]; at angle 0 the axis is
// (0,0,1); at angle pi the axis sign makes its first nonzero coordinate
// positive.
AxisAngle canonical_axis_angle(const Rotation3& r);

// Frobenius distance between rotation matrices.
double rotation_distance(const Rotation3& a, const Rotation3& b);
// Plain 4-vector Euclidean distance (so q and -q are far apart).
double rotation_distance(const Spin& a, const Spin& b);

}  // namespace sphrep
