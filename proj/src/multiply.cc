#include "sphrep/multiply.h"

#include <cmath>
#include <stdexcept>

namespace sphrep {

namespace {

constexpr double kBranchEps = 1e-9;

double clamp01(double x) { return std::min(1.0, std::max(-1.0, x)); }

bool near_zero_turn(double psi) {
  return psi <= kBranchEps || kTwoPi - psi <= kBranchEps;
}

Spin spin_distance_pick(const Spin& geo, const Spin& target) {
  double plus = rotation_distance(geo, target);
  double minus = rotation_distance(negate(geo), target);
  return plus <= minus ? geo : negate(geo);
}

// Package the SO3 element; the SU2 sheet is the canonical lift flipped, if
// need be, toward the sign the -1 product forces (the one discrete choice
// geometry cannot see).
ThirdFactor finish(Rotation3 rot, const Spin& forced, GroupFlavor flavor,
                   ThirdFactor::Kind kind, std::string locus = {}) {
  ThirdFactor out;
  out.kind = kind;
  out.rot = rot;
  out.locus = std::move(locus);
  AxisAngle aa = canonical_axis_angle(rot);
  out.axis = aa.axis;
  out.angle = aa.angle;
  out.spin = flavor == GroupFlavor::SU2 ? spin_distance_pick(lift(rot), forced)
                                        : lift(rot);
  return out;
}

}  // namespace

RotationTriple rotations_from_triangle(const GeneralizedTriangle& tri,
                                       GroupFlavor flavor) {
  RotationTriple out;
  out.flavor = flavor;
  out.source = tri;
  const double th[3] = {tri.angles.t0, tri.angles.t1, tri.angles.t2};
  for (int i = 0; i < 3; ++i) {
    if (std::abs(norm(tri.vertex[i]) - 1) > 1e-9)
      throw std::domain_error("rotations_from_triangle: vertex not unit");
    if (th[i] < -1e-12 || th[i] > kPi + 1e-12)
      throw std::domain_error("rotations_from_triangle: angle outside [0, pi]");
    out.rot[i] = rot3_from_axis_angle(tri.vertex[i], 2 * th[i]);
    out.spin[i] = spin_from_axis_angle(tri.vertex[i], 2 * th[i]);
  }
  return out;
}

double triple_residual(const RotationTriple& t) {
  if (t.flavor == GroupFlavor::SO3) {
    Rotation3 p = compose(compose(t.rot[2], t.rot[1]), t.rot[0]);
    return rotation_distance(p, rot3_identity());
  }
  Spin p = compose(compose(t.spin[2], t.spin[1]), t.spin[0]);
  return rotation_distance(p, negate(spin_identity()));
}

ThirdFactor third_rotation(const Vec3& v0, double phi0, const Vec3& v1,
                           double phi1, GroupFlavor flavor) {
  if (std::abs(norm(v0) - 1) > 1e-9 || std::abs(norm(v1) - 1) > 1e-9)
    throw std::domain_error("third_rotation: axis not unit");
  const double modulus = angle_modulus(flavor);
  phi0 = reduce_angle(phi0, modulus);
  phi1 = reduce_angle(phi1, modulus);
  // SO3 shadows drive the geometry; the SU2 sheet is a single discrete sign
  // fixed at the end against the forced product.
  const double psi0 = reduce_angle(phi0, kTwoPi);
  const double psi1 = reduce_angle(phi1, kTwoPi);
  const Spin s0 = spin_from_axis_angle(v0, phi0);
  const Spin s1 = spin_from_axis_angle(v1, phi1);
  const Spin forced = negate(inverse(compose(s1, s0)));  // C = -(BA)^{-1}

  const bool triv0 = near_zero_turn(psi0);
  const bool triv1 = near_zero_turn(psi1);
  if (triv0 && triv1)
    return finish(rot3_identity(), forced, flavor,
                  ThirdFactor::Kind::IdentityWithFreeVertex, "anywhere");
  if (triv0)
    return finish(rot3_from_axis_angle(v1, kTwoPi - psi1), forced, flavor,
                  ThirdFactor::Kind::Unique);
  if (triv1)
    return finish(rot3_from_axis_angle(v0, kTwoPi - psi0), forced, flavor,
                  ThirdFactor::Kind::Unique);

  const double cd = clamp01(dot(v0, v1));
  const double sd = norm(cross(v0, v1));
  if (sd <= kBranchEps && cd > 0) {  // coincident fixed points
    double s = reduce_angle(psi0 + psi1, kTwoPi);
    if (near_zero_turn(s))
      return finish(rot3_identity(), forced, flavor,
                    ThirdFactor::Kind::IdentityWithFreeVertex,
                    "any point; the two factors are mutually inverse");
    return finish(rot3_from_axis_angle(v0, kTwoPi - s), forced, flavor,
                  ThirdFactor::Kind::Unique);
  }
  if (sd <= kBranchEps) {  // antipodal fixed points
    double s = reduce_angle(psi0 - psi1, kTwoPi);
    if (near_zero_turn(s))
      return finish(rot3_identity(), forced, flavor,
                    ThirdFactor::Kind::IdentityWithFreeVertex,
                    "any point of the segment joining the fixed points");
    return finish(rot3_from_axis_angle(v0, kTwoPi - s), forced, flavor,
                  ThirdFactor::Kind::Unique);
  }

  // Generic case: v0, v1 span a genuine spherical triangle with corner
  // angles half the rotation angles; the third corner carries C.
  const double t0 = psi0 / 2, t1 = psi1 / 2;
  const double c = std::atan2(sd, cd);
  const double t2 = third_angle(t0, t1, c);
  const double cl1 =
      clamp01((std::cos(t1) + std::cos(t2) * std::cos(t0)) /
              (std::sin(t2) * std::sin(t0)));
  const double l1 = std::acos(cl1);
  const Vec3 t01 = normalized(v1 - cd * v0);
  const Vec3 w = std::cos(t0) * t01 - std::sin(t0) * cross(v0, t01);
  const Vec3 v2 = std::cos(l1) * v0 + std::sin(l1) * w;
  return finish(rot3_from_axis_angle(normalized(v2), 2 * t2), forced, flavor,
                ThirdFactor::Kind::Unique);
}

double third_angle(double a_ang, double b_ang, double c) {
  auto check = [](double x, const char* what) {
    if (x < -1e-12 || x > kPi + 1e-12)
      throw std::domain_error(std::string("third_angle: ") + what +
                              " outside [0, pi]");
    return std::min(kPi, std::max(0.0, x));
  };
  a_ang = check(a_ang, "first angle");
  b_ang = check(b_ang, "second angle");
  c = check(c, "side");
  double u = -std::cos(a_ang) * std::cos(b_ang) +
             std::sin(a_ang) * std::sin(b_ang) * std::cos(c);
  if (std::abs(u) > 1 + 1e-12)
    throw std::domain_error("third_angle: cosine argument outside [-1, 1]");
  return std::acos(clamp01(u));
}

}  // namespace sphrep
