#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sphrep/characters.h"
#include "sphrep/triangles.h"

namespace sphrep {

// Which parameter polytope a point lives in: the tetrahedron of the trivial
// component, the octahedron of the other component, or the two-generator
// free-group slice (l, th0, th1).
enum class ParamSpace { TetraC0, OctaC1, F2 };

struct ParamPoint {
  ParamSpace space = ParamSpace::TetraC0;
  AngleTriple base{};  // for F2: (l, th0, th1)
  PastingAngles pasting;
};

// Validates polytope membership (closed, with a small numerical slack) and
// pasting range before returning the point.
ParamPoint make_param_point(ParamSpace space, const AngleTriple& base,
                            const PastingAngles& pasting);

// Wrap-aware distance: max over base coordinates (absolute) and pasting
// coordinates (modulo the pasting modulus).
double param_distance(const ParamPoint& a, const ParamPoint& b);

enum class AxialKind { A, B, C };
enum class FiberKind { a, b, c };

// Axial involution I_A/I_B/I_C: flips the two base angles away from the
// fixed index (I_A fixes index 0) to pi - theta, and the matching pasting
// angles to modulus - phi. Rejects F2 points.
ParamPoint klein_axial(AxialKind which, const ParamPoint& pt);

// Fiberwise involution on the modulus-4pi torus: i_a adds (2pi, 2pi, 0),
// i_b adds (0, 2pi, 2pi), i_c adds (2pi, 0, 2pi). Rejects modulus 2pi,
// where the action is trivial.
PastingAngles klein_fiber(FiberKind which, const PastingAngles& p);

// The eight octahedron faces; the unprimed four are also the tetrahedron
// faces of the trivial component.
enum class FaceLabel { a, b, c, d, ap, bp, cp, dp };

// Face of the octahedron the axial involution carries `face` to
// (I_A: a<->c, b<->d, ap<->cp, bp<->dp; I_B: a<->b, c<->d, ap<->bp,
// cp<->dp; I_C: a<->d, b<->c, ap<->dp, bp<->cp).
FaceLabel axial_face_image(AxialKind which, FaceLabel face);

// Signed unit direction (entries +-1) of the stabilizer circle acting on the
// pasting torus over the face.
Vec3 face_circle_direction(FaceLabel face);

// Shift p by t times the face direction, reduced mod p.modulus.
PastingAngles face_circle_action(FaceLabel face, const PastingAngles& p,
                                 double t);

// Whether the base triple lies on the face's defining plane (within tol).
bool on_face(FaceLabel face, const AngleTriple& base, double tol);

struct FaceBasePoint {
  FaceLabel face;
  AngleTriple base;
};

// A fixed base point in the open part of each of the eight octahedron faces
// (on its own face plane and no other).
const std::array<FaceBasePoint, 8>& octahedron_face_samples();

struct F2Point {
  double l = 0, th0 = 0, th1 = 0;
};

enum class F2KleinKind { T0, T1, T0T1 };

// Klein action on F2 parameters: T0: (pi-l, 2pi-th0, th1),
// T1: (pi-l, th0, 2pi-th1), T0T1: (l, 2pi-th0, 2pi-th1).
F2Point f2_klein(F2KleinKind which, const F2Point& x);

// One element of the double Klein group, indexed by two Klein labels in
// 0..3 (0 = identity, 1 = A/a, 2 = B/b, 3 = C/c): the axial part `axial`
// applies I_axial paired with its fiber twin i_axial, the fiber part applies
// i_fiber alone. Requires modulus 4pi unless both labels are 0.
ParamPoint double_klein_apply(int axial, int fiber, const ParamPoint& pt);

// The orbit of pt under all 16 double-Klein elements, deduplicated at 1e-10
// (wrap-aware); generically 16 points.
std::vector<ParamPoint> orbit_double_klein(const ParamPoint& pt);

// Deterministic representative of p modulo the fiber lattice generated by
// (4pi, 0, 0), (0, 4pi, 0), (0, 0, 4pi), (2pi, 2pi, 2pi) -- and, when a face
// is given, modulo the face's stabilizer circle line as well. Lexicographic
// minimum; idempotent. Requires modulus 4pi.
PastingAngles canonical_fiber_rep(const std::optional<FaceLabel>& face,
                                  const PastingAngles& p);

}  // namespace sphrep
