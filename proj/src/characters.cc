#include "sphrep/characters.h"

#include <cmath>
#include <stdexcept>

namespace sphrep {

namespace {

constexpr double kDomainSlack = 1e-9;

double azimuth(const Vec3& v) { return std::atan2(v.y, v.x); }

Rotation3 conj(const Rotation3& g, const Rotation3& x) {
  return compose(compose(g, x), inverse(g));
}

template <typename T>
T relation_word(const T& c1, const T& d1, const T& c2, const T& d2) {
  // [d1, c1][c2, d2] with [x, y] = x y x^{-1} y^{-1}.
  T w1 = compose(compose(compose(d1, c1), inverse(d1)), inverse(c1));
  T w2 = compose(compose(compose(c2, d2), inverse(c2)), inverse(d2));
  return compose(w1, w2);
}

template <typename T>
std::array<T, 12> word_values(const T& c1, const T& c2, const T& d1,
                              const T& d2) {
  T c1c2 = compose(c1, c2);
  T c1c2d1 = compose(c1c2, d1);
  return {c1,
          c2,
          d1,
          d2,
          c1c2,
          compose(c1, d1),
          compose(c2, d2),
          compose(d1, d2),
          compose(c1, d2),
          compose(c2, d1),
          c1c2d1,
          compose(c1c2d1, d2)};
}

double trace3(const Rotation3& r) { return r.m[0] + r.m[4] + r.m[8]; }

double trace2(const Spin& s) { return 2 * s.w; }

Fingerprint fingerprint_of(const Rotation3& c1, const Rotation3& c2,
                           const Rotation3& d1, const Rotation3& d2) {
  Fingerprint f;
  auto w = word_values(c1, c2, d1, d2);
  for (int i = 0; i < 12; ++i) f.trace[i] = trace3(w[i]);
  return f;
}

Fingerprint fingerprint_of(const Spin& c1, const Spin& c2, const Spin& d1,
                           const Spin& d2) {
  Fingerprint f;
  auto w = word_values(c1, c2, d1, d2);
  for (int i = 0; i < 12; ++i) f.trace[i] = trace2(w[i]);
  return f;
}

}  // namespace

PantsRep pants_rep(const AngleTriple& t, GroupFlavor flavor) {
  if (!in_tetrahedron(t, -kDomainSlack))
    throw std::domain_error("pants_rep: angles outside the tetrahedron");
  PantsRep out;
  out.flavor = flavor;
  out.tri = representative_from_angles(t);
  RotationTriple rt = rotations_from_triangle(out.tri, flavor);
  for (int i = 0; i < 3; ++i) {
    out.h_rot[i] = rt.rot[i];
    out.h_spin[i] = rt.spin[i];
  }
  out.h_spin[2] = negate(out.h_spin[2]);  // product Id in both carriers
  return out;
}

PastingAngles make_pasting_angles(double p0, double p1, double p2,
                                  GroupFlavor flavor) {
  double m = angle_modulus(flavor);
  return {{reduce_angle(p0, m), reduce_angle(p1, m), reduce_angle(p2, m)}, m};
}

namespace {

void check_pasting(const PastingAngles& p, GroupFlavor flavor,
                   const char* who) {
  if (std::abs(p.modulus - angle_modulus(flavor)) > 1e-12)
    throw std::domain_error(std::string(who) +
                            ": pasting modulus does not match the flavor");
  for (double x : p.phi)
    if (x < -1e-12 || x >= p.modulus + 1e-12)
      throw std::domain_error(std::string(who) +
                              ": pasting angle outside [0, modulus)");
}

// Shared assembly once the three pasting spins are chosen. The generator
// spins use the raw boundary-1 holonomy and the inverse of the corrected
// boundary-2 holonomy.
SurfaceRep assemble(PantsRep upper, PantsRep lower, const Spin P[3],
                    const AngleTriple& t, const PastingAngles& p,
                    GroupFlavor flavor) {
  SurfaceRep rep;
  rep.flavor = flavor;
  rep.upper = std::move(upper);
  rep.lower = std::move(lower);
  rep.base = t;
  rep.pasting = p;
  for (int i = 0; i < 3; ++i) {
    rep.sP[i] = P[i];
    rep.P[i] = project(P[i]);
  }
  rep.sc1 = rep.upper.h_spin[1];
  rep.sc2 = inverse(rep.upper.h_spin[2]);
  rep.sd1 = compose(inverse(P[0]), P[1]);
  rep.sd2 = compose(inverse(P[0]), P[2]);
  rep.c1 = rep.upper.h_rot[1];
  rep.c2 = inverse(rep.upper.h_rot[2]);
  rep.d1 = compose(inverse(rep.P[0]), rep.P[1]);
  rep.d2 = compose(inverse(rep.P[0]), rep.P[2]);
  return rep;
}

}  // namespace

SurfaceRep surface_rep_c0(const AngleTriple& t, const PastingAngles& p,
                          GroupFlavor flavor) {
  if (!in_tetrahedron(t, -kDomainSlack))
    throw std::domain_error("surface_rep_c0: angles outside the tetrahedron");
  check_pasting(p, flavor, "surface_rep_c0");
  PantsRep pants = pants_rep(t, flavor);
  Spin P[3];
  for (int i = 0; i < 3; ++i)
    P[i] = spin_from_axis_angle(pants.tri.vertex[i], p.phi[i]);
  SurfaceRep rep = assemble(pants, pants, P, t, p, flavor);
  rep.punctured = false;
  return rep;
}

SurfaceRep surface_rep_c1(const AngleTriple& t, const PastingAngles& p,
                          GroupFlavor flavor) {
  if (!in_octahedron(t, -kDomainSlack))
    throw std::domain_error("surface_rep_c1: angles outside the octahedron");
  check_pasting(p, flavor, "surface_rep_c1");
  PantsRep up = pants_rep(t, flavor);
  PantsRep low = pants_rep(kappa(t), flavor);

  const Vec3 v1 = up.tri.vertex[1];
  const Vec3 v1p = low.tri.vertex[1];
  const Vec3 v2p = low.tri.vertex[2];
  Spin P[3];
  P[0] = spin_from_axis_angle(up.tri.vertex[0], p.phi[0]);
  // Equatorial turn taking v1 to the antipode of the lower v1, then the
  // pasting turn about that axis.
  double dprime = reduce_angle(azimuth(-1.0 * v1p) - azimuth(v1), kTwoPi);
  P[1] = compose(spin_from_axis_angle(-1.0 * v1p, p.phi[1]),
                 spin_from_axis_angle({0, 0, 1}, dprime));
  // Both marked points sit at arc length[1] from vertex 0 along the great
  // circle leaving vertex 0 at angle t0; slide one to the other about the
  // circle's pole, then turn by phi_2.
  const double t0 = up.angles().t0;
  const Vec3 pole{0, -std::sin(t0), -std::cos(t0)};
  double slide = low.tri.length[1] - up.tri.length[1];
  P[2] = compose(spin_from_axis_angle(v2p, p.phi[2]),
                 spin_from_axis_angle(pole, slide));

  SurfaceRep rep = assemble(std::move(up), std::move(low), P, t, p, flavor);
  rep.punctured = flavor == GroupFlavor::SU2;
  rep.boundary_sigma[1] = flavor == GroupFlavor::SU2 ? -1 : 1;
  return rep;
}

SurfaceRep other_component_basis() {
  return surface_rep_c1({kPi / 2, kPi / 2, kPi},
                        make_pasting_angles(0, 0, 0, GroupFlavor::SO3),
                        GroupFlavor::SO3);
}

double relation_residual(const SurfaceRep& rep) {
  if (rep.flavor == GroupFlavor::SO3) {
    Rotation3 w = relation_word(rep.c1, rep.d1, rep.c2, rep.d2);
    return rotation_distance(w, rot3_identity());
  }
  Spin w = relation_word(rep.sc1, rep.sd1, rep.sc2, rep.sd2);
  Spin target = rep.punctured ? negate(spin_identity()) : spin_identity();
  return rotation_distance(w, target);
}

double pasting_consistency(const SurfaceRep& rep) {
  double worst = 0;
  for (int i = 0; i < 3; ++i) {
    Rotation3 pasted = conj(rep.P[i], rep.upper.h_rot[i]);
    worst = std::max(worst, rotation_distance(pasted, rep.lower.h_rot[i]));
  }
  return worst;
}

int stiefel_whitney(const SurfaceRep& rep) {
  if (rep.flavor != GroupFlavor::SO3)
    throw std::domain_error("stiefel_whitney: defined for the SO3 flavor");
  if (relation_residual(rep) >= 1e-6)
    throw std::domain_error("stiefel_whitney: relation residual too large");
  Spin w = relation_word(lift(rep.c1), lift(rep.d1), lift(rep.c2),
                         lift(rep.d2));
  if (rotation_distance(w, spin_identity()) < 1e-6) return 0;
  if (rotation_distance(w, negate(spin_identity())) < 1e-6) return 1;
  throw std::runtime_error(
      "stiefel_whitney: relation word is not near a central element");
}

Fingerprint fingerprint(const SurfaceRep& rep, GroupFlavor flavor) {
  if (flavor == GroupFlavor::SO3)
    return fingerprint_of(rep.c1, rep.c2, rep.d1, rep.d2);
  return fingerprint_of(rep.sc1, rep.sc2, rep.sd1, rep.sd2);
}

double fingerprint_distance(const Fingerprint& a, const Fingerprint& b) {
  double worst = 0;
  for (int i = 0; i < 12; ++i)
    worst = std::max(worst, std::abs(a.trace[i] - b.trace[i]));
  return worst;
}

F2Rep f2_rep(double l, double th0, double th1, GroupFlavor flavor) {
  if (l < -1e-12 || l > kPi + 1e-12)
    throw std::domain_error("f2_rep: arc length outside [0, pi]");
  l = std::min(kPi, std::max(0.0, l));
  double m = angle_modulus(flavor);
  F2Rep out;
  out.flavor = flavor;
  out.l = l;
  out.th0 = reduce_angle(th0, m);
  out.th1 = reduce_angle(th1, m);
  out.p = {1, 0, 0};
  out.q = {std::cos(l), -std::sin(l), 0};
  out.g_rot[0] = rot3_from_axis_angle(out.p, out.th0);
  out.g_rot[1] = rot3_from_axis_angle(out.q, out.th1);
  out.g_spin[0] = spin_from_axis_angle(out.p, out.th0);
  out.g_spin[1] = spin_from_axis_angle(out.q, out.th1);
  return out;
}

Fingerprint f2_fingerprint(const F2Rep& rep, GroupFlavor flavor) {
  if (flavor == GroupFlavor::SO3)
    return fingerprint_of(rot3_identity(), rot3_identity(), rep.g_rot[0],
                          rep.g_rot[1]);
  return fingerprint_of(spin_identity(), spin_identity(), rep.g_spin[0],
                        rep.g_spin[1]);
}

}  // namespace sphrep
