#pragma once

#include <array>

#include "sphrep/multiply.h"
#include "sphrep/rotations.h"
#include "sphrep/triangles.h"

namespace sphrep {

// Pair-of-pants representation attached to a triangle: boundary holonomies
// about the three vertices by twice the corner angles. The spin form stores
// the sign-corrected third factor, so h[2]·h[1]·h[0] is the identity in both
// flavors (the raw spin product is -1; see RotationTriple).
struct PantsRep {
  GroupFlavor flavor = GroupFlavor::SO3;
  GeneralizedTriangle tri;
  Rotation3 h_rot[3];
  Spin h_spin[3];
  const AngleTriple& angles() const { return tri.angles; }
};

// t must lie in the closed tetrahedron of admissible angle triples.
PantsRep pants_rep(const AngleTriple& t, GroupFlavor flavor);

// Pasting angles, one per glued boundary, reduced into [0, modulus) where
// the modulus is the flavor's rotation-angle period.
struct PastingAngles {
  double phi[3] = {0, 0, 0};
  double modulus = kTwoPi;
};

PastingAngles make_pasting_angles(double p0, double p1, double p2,
                                  GroupFlavor flavor);

// Genus-2 surface representation assembled from two pants and three pasting
// maps, presented on the generators (c1, d1, c2, d2). Conventions:
//   c1 = upper boundary-1 holonomy, c2 = inverse of the corrected upper
//   boundary-2 holonomy, d1 = P0^{-1} P1, d2 = P0^{-1} P2,
// and the surface relation is W = [d1,c1][c2,d2] with [x,y] = xyx^{-1}y^{-1}.
// W is the identity, except that the SU2 one-component builder produces the
// once-punctured representation whose boundary word is exactly -1 (punctured
// flag set). boundary_sigma records the lifted pasting-consistency signs
// P_i K_i P_i^{-1} = sigma_i K_i' for the SU2 spins.
struct SurfaceRep {
  GroupFlavor flavor = GroupFlavor::SO3;
  bool punctured = false;
  Rotation3 c1, c2, d1, d2;
  Spin sc1, sc2, sd1, sd2;
  Rotation3 P[3];
  Spin sP[3];
  PantsRep upper, lower;
  AngleTriple base;
  PastingAngles pasting;
  int boundary_sigma[3] = {1, 1, 1};
};

// Component-0 builder: both pants carry the same triangle; P_i turns by
// phi_i about vertex i. Requires t in the closed tetrahedron.
SurfaceRep surface_rep_c0(const AngleTriple& t, const PastingAngles& p,
                          GroupFlavor flavor);

// Component-1 builder: upper pants from t, lower pants from kappa(t). P0 as
// in component 0; P1 carries vertex 1 to the antipode of the lower vertex 1
// by an equatorial turn; P2 transports the marked point along its arc before
// turning by phi_2. Requires t in the closed octahedron.
SurfaceRep surface_rep_c1(const AngleTriple& t, const PastingAngles& p,
                          GroupFlavor flavor);

// The basis representation of the nontrivial component:
// c1 = diag(1,-1,-1), d1 = diag(-1,-1,1), c2 = d2 = Id.
SurfaceRep other_component_basis();

// Distance of the builder's relation word from its target (Id, or -1 for
// the punctured SU2 builder), in the rep's flavor.
double relation_residual(const SurfaceRep& rep);

// Max over the three boundaries of the SO(3) distance between the pasted
// upper holonomy P_i h0_i P_i^{-1} and the lower holonomy h1_i.
double pasting_consistency(const SurfaceRep& rep);

// Stiefel-Whitney class of an SO3 representation: lift the generators and
// evaluate the relation word; +Id -> 0, -Id -> 1.
int stiefel_whitney(const SurfaceRep& rep);

// Conjugation-invariant trace vector over the fixed 12-word list
// {c1, c2, d1, d2, c1c2, c1d1, c2d2, d1d2, c1d2, c2d1, c1c2d1, c1c2d1d2}.
struct Fingerprint {
  std::array<double, 12> trace{};
};

// flavor selects the carrier: SO3 takes 3x3 traces of the rotation shadows,
// SU2 takes 2x2 traces (twice the scalar part) of the stored spins.
Fingerprint fingerprint(const SurfaceRep& rep, GroupFlavor flavor);

double fingerprint_distance(const Fingerprint& a, const Fingerprint& b);

// Two-generator free-group representation: rotations about two points of a
// common great circle at arc distance l, by angles th0 and th1.
struct F2Rep {
  GroupFlavor flavor = GroupFlavor::SO3;
  Vec3 p{1, 0, 0}, q{1, 0, 0};
  double l = 0, th0 = 0, th1 = 0;
  Rotation3 g_rot[2];
  Spin g_spin[2];
};

F2Rep f2_rep(double l, double th0, double th1, GroupFlavor flavor);

// Fingerprint of an F2 rep through the embedding c's -> Id, d's -> (g0, g1).
Fingerprint f2_fingerprint(const F2Rep& rep, GroupFlavor flavor);

}  // namespace sphrep
