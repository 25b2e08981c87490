#pragma once

#include <string>

#include "sphrep/rotations.h"
#include "sphrep/triangles.h"

namespace sphrep {

// Rotation triple attached to a (generalized) triangle: A, B, C about the
// three vertices by twice the triangle angles. Product convention:
//   SO3:  C·B·A = Id      SU2:  C·B·A = -1
// with the raw vertex-axis lifts (no sign correction).
struct RotationTriple {
  GroupFlavor flavor = GroupFlavor::SO3;
  Rotation3 rot[3];
  Spin spin[3];
  GeneralizedTriangle source;
};

RotationTriple rotations_from_triangle(const GeneralizedTriangle& tri,
                                       GroupFlavor flavor);

// Distance of the product C·B·A from the flavor's target (Id or -1).
double triple_residual(const RotationTriple& t);

// Third factor closing a product of two rotations: the canonical (v2, phi2)
// with R_{v2,phi2}·R_{v1,phi1}·R_{v0,phi0} = Id (SO3) or -1 (SU2), found by
// the spherical-triangle case table rather than by multiplying matrices.
struct ThirdFactor {
  enum class Kind { Unique, IdentityWithFreeVertex };
  Kind kind = Kind::Unique;
  Vec3 axis{0, 0, 1};   // canonical axis-angle of the SO3 part
  double angle = 0;     // in [0, pi]
  Rotation3 rot;        // the SO3 element itself
  Spin spin;            // SU2 flavor: the sheet with the -1 product; else lift
  std::string locus;    // free-vertex cases: where the vertex may sit
};

ThirdFactor third_rotation(const Vec3& v0, double phi0, const Vec3& v1,
                           double phi1, GroupFlavor flavor);

// Spherical law of cosines for angles:
//   third = arccos(-cos(a_ang)cos(b_ang) + sin(a_ang)sin(b_ang)cos(c)).
// a_ang, b_ang are the two known corner angles and c the side between them.
double third_angle(double a_ang, double b_ang, double c);

}  // namespace sphrep
