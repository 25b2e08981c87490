#include "sphrep/actions.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sphrep {
namespace {

constexpr double kMembershipSlack = 1e-9;
constexpr double kOrbitDedupEps = 1e-10;

double wrap_distance(double x, double y, double modulus) {
  double d = std::fmod(std::abs(x - y), modulus);
  return std::min(d, modulus - d);
}

PastingAngles reduced(const PastingAngles& p) {
  PastingAngles out = p;
  for (double& phi : out.phi) phi = reduce_angle(phi, p.modulus);
  return out;
}

void require_fiber_modulus(const PastingAngles& p, const char* who) {
  if (p.modulus != 2 * kTwoPi)
    throw std::domain_error(std::string(who) +
                            ": requires the modulus-4pi pasting torus");
}

AxialKind axial_from_label(int label) {
  switch (label) {
    case 1: return AxialKind::A;
    case 2: return AxialKind::B;
    case 3: return AxialKind::C;
  }
  throw std::invalid_argument("Klein label out of range");
}

FiberKind fiber_from_label(int label) {
  switch (label) {
    case 1: return FiberKind::a;
    case 2: return FiberKind::b;
    case 3: return FiberKind::c;
  }
  throw std::invalid_argument("Klein label out of range");
}

}  // namespace

ParamPoint make_param_point(ParamSpace space, const AngleTriple& base,
                            const PastingAngles& pasting) {
  switch (space) {
    case ParamSpace::TetraC0:
      if (!in_tetrahedron(base, -kMembershipSlack))
        throw std::domain_error("make_param_point: base outside the tetrahedron");
      break;
    case ParamSpace::OctaC1:
      if (!in_octahedron(base, -kMembershipSlack))
        throw std::domain_error("make_param_point: base outside the octahedron");
      break;
    case ParamSpace::F2:
      if (base.t0 < -kMembershipSlack || base.t0 > kPi + kMembershipSlack)
        throw std::domain_error("make_param_point: F2 arc length outside [0, pi]");
      break;
  }
  if (pasting.modulus != kTwoPi && pasting.modulus != 2 * kTwoPi)
    throw std::domain_error("make_param_point: unrecognized pasting modulus");
  return ParamPoint{space, base, reduced(pasting)};
}

double param_distance(const ParamPoint& a, const ParamPoint& b) {
  if (a.space != b.space || a.pasting.modulus != b.pasting.modulus)
    throw std::invalid_argument("param_distance: incomparable points");
  double d = 0;
  d = std::max(d, std::abs(a.base.t0 - b.base.t0));
  d = std::max(d, std::abs(a.base.t1 - b.base.t1));
  d = std::max(d, std::abs(a.base.t2 - b.base.t2));
  for (int i = 0; i < 3; ++i)
    d = std::max(d, wrap_distance(a.pasting.phi[i], b.pasting.phi[i],
                                  a.pasting.modulus));
  return d;
}

ParamPoint klein_axial(AxialKind which, const ParamPoint& pt) {
  if (pt.space == ParamSpace::F2)
    throw std::domain_error("klein_axial: unsupported for F2 points");
  const AngleTriple& t = pt.base;
  const double m = pt.pasting.modulus;
  const double* f = pt.pasting.phi;
  AngleTriple base;
  PastingAngles pasting;
  pasting.modulus = m;
  switch (which) {
    case AxialKind::A:
      base = {t.t0, kPi - t.t1, kPi - t.t2};
      pasting.phi[0] = f[0];
      pasting.phi[1] = m - f[1];
      pasting.phi[2] = m - f[2];
      break;
    case AxialKind::B:
      base = {kPi - t.t0, t.t1, kPi - t.t2};
      pasting.phi[0] = m - f[0];
      pasting.phi[1] = f[1];
      pasting.phi[2] = m - f[2];
      break;
    case AxialKind::C:
      base = {kPi - t.t0, kPi - t.t1, t.t2};
      pasting.phi[0] = m - f[0];
      pasting.phi[1] = m - f[1];
      pasting.phi[2] = f[2];
      break;
  }
  return make_param_point(pt.space, base, pasting);
}

PastingAngles klein_fiber(FiberKind which, const PastingAngles& p) {
  require_fiber_modulus(p, "klein_fiber");
  double shift[3] = {0, 0, 0};
  switch (which) {
    case FiberKind::a: shift[0] = kTwoPi; shift[1] = kTwoPi; break;
    case FiberKind::b: shift[1] = kTwoPi; shift[2] = kTwoPi; break;
    case FiberKind::c: shift[0] = kTwoPi; shift[2] = kTwoPi; break;
  }
  PastingAngles out = p;
  for (int i = 0; i < 3; ++i)
    out.phi[i] = reduce_angle(p.phi[i] + shift[i], p.modulus);
  return out;
}

FaceLabel axial_face_image(AxialKind which, FaceLabel face) {
  using F = FaceLabel;
  static const F table[3][8] = {
      // I_A: a<->c, b<->d, ap<->cp, bp<->dp
      {F::c, F::d, F::a, F::b, F::cp, F::dp, F::ap, F::bp},
      // I_B: a<->b, c<->d, ap<->bp, cp<->dp
      {F::b, F::a, F::d, F::c, F::bp, F::ap, F::dp, F::cp},
      // I_C: a<->d, b<->c, ap<->dp, bp<->cp
      {F::d, F::c, F::b, F::a, F::dp, F::cp, F::bp, F::ap},
  };
  int w = static_cast<int>(which);
  int fidx = static_cast<int>(face);
  if (w < 0 || w > 2 || fidx < 0 || fidx > 7)
    throw std::invalid_argument("axial_face_image: unknown face or involution");
  return table[w][fidx];
}

Vec3 face_circle_direction(FaceLabel face) {
  switch (face) {
    case FaceLabel::a:  return {1, 1, 1};
    case FaceLabel::b:  return {1, -1, 1};
    case FaceLabel::c:  return {-1, 1, 1};
    case FaceLabel::d:  return {1, 1, -1};
    case FaceLabel::ap: return {1, -1, 1};
    case FaceLabel::bp: return {1, 1, 1};
    case FaceLabel::cp: return {-1, -1, 1};
    case FaceLabel::dp: return {1, -1, -1};
  }
  throw std::invalid_argument("face_circle_direction: unknown face");
}

PastingAngles face_circle_action(FaceLabel face, const PastingAngles& p,
                                 double t) {
  Vec3 dir = face_circle_direction(face);
  PastingAngles out = p;
  out.phi[0] = reduce_angle(p.phi[0] + t * dir.x, p.modulus);
  out.phi[1] = reduce_angle(p.phi[1] + t * dir.y, p.modulus);
  out.phi[2] = reduce_angle(p.phi[2] + t * dir.z, p.modulus);
  return out;
}

bool on_face(FaceLabel face, const AngleTriple& t, double tol) {
  double v = 0;
  switch (face) {
    case FaceLabel::a:  v = t.t0 + t.t1 + t.t2 - kPi; break;
    case FaceLabel::b:  v = t.t1 - (t.t0 + t.t2 - kPi); break;
    case FaceLabel::c:  v = t.t0 - (t.t1 + t.t2 - kPi); break;
    case FaceLabel::d:  v = t.t2 - (t.t0 + t.t1 - kPi); break;
    case FaceLabel::ap: v = t.t1 - (t.t0 + t.t2); break;
    case FaceLabel::bp: v = t.t0 + t.t1 + t.t2 - 2 * kPi; break;
    case FaceLabel::cp: v = t.t2 - (t.t0 + t.t1); break;
    case FaceLabel::dp: v = t.t0 - (t.t1 + t.t2); break;
    default:
      throw std::invalid_argument("on_face: unknown face");
  }
  return std::abs(v) <= tol;
}

const std::array<FaceBasePoint, 8>& octahedron_face_samples() {
  static const std::array<FaceBasePoint, 8> samples = {{
      {FaceLabel::a, {kPi / 3, kPi / 3, kPi / 3}},
      {FaceLabel::b, {1.9, 1.9 + 1.8 - kPi, 1.8}},
      {FaceLabel::c, {1.9 + 1.8 - kPi, 1.9, 1.8}},
      {FaceLabel::d, {1.9, 1.8, 1.9 + 1.8 - kPi}},
      {FaceLabel::ap, {0.9, 1.6, 0.7}},
      {FaceLabel::bp, {2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3}},
      {FaceLabel::cp, {0.7, 0.9, 1.6}},
      {FaceLabel::dp, {1.6, 0.9, 0.7}},
  }};
  return samples;
}

F2Point f2_klein(F2KleinKind which, const F2Point& x) {
  F2Point out = x;
  switch (which) {
    case F2KleinKind::T0:
      out.l = kPi - x.l;
      out.th0 = reduce_angle(kTwoPi - x.th0, kTwoPi);
      break;
    case F2KleinKind::T1:
      out.l = kPi - x.l;
      out.th1 = reduce_angle(kTwoPi - x.th1, kTwoPi);
      break;
    case F2KleinKind::T0T1:
      out.th0 = reduce_angle(kTwoPi - x.th0, kTwoPi);
      out.th1 = reduce_angle(kTwoPi - x.th1, kTwoPi);
      break;
  }
  return out;
}

ParamPoint double_klein_apply(int axial, int fiber, const ParamPoint& pt) {
  if (axial < 0 || axial > 3 || fiber < 0 || fiber > 3)
    throw std::invalid_argument("double_klein_apply: Klein label out of range");
  if (axial == 0 && fiber == 0) return pt;
  require_fiber_modulus(pt.pasting, "double_klein_apply");
  ParamPoint q = pt;
  if (axial != 0) {
    q = klein_axial(axial_from_label(axial), q);
    q.pasting = klein_fiber(fiber_from_label(axial), q.pasting);
  }
  if (fiber != 0) q.pasting = klein_fiber(fiber_from_label(fiber), q.pasting);
  return q;
}

std::vector<ParamPoint> orbit_double_klein(const ParamPoint& pt) {
  require_fiber_modulus(pt.pasting, "orbit_double_klein");
  std::vector<ParamPoint> orbit;
  for (int s = 0; s < 4; ++s)
    for (int f = 0; f < 4; ++f) {
      ParamPoint image = double_klein_apply(s, f, pt);
      bool seen = false;
      for (const ParamPoint& prev : orbit)
        if (param_distance(prev, image) < kOrbitDedupEps) {
          seen = true;
          break;
        }
      if (!seen) orbit.push_back(image);
    }
  return orbit;
}

PastingAngles canonical_fiber_rep(const std::optional<FaceLabel>& face,
                                  const PastingAngles& p) {
  require_fiber_modulus(p, "canonical_fiber_rep");
  const double m = p.modulus;
  PastingAngles q = reduced(p);
  if (face) {
    Vec3 dir = face_circle_direction(*face);
    double t = -q.phi[0] * dir.x;
    q.phi[0] = 0;
    q.phi[1] = reduce_angle(q.phi[1] + t * dir.y, m);
    q.phi[2] = reduce_angle(q.phi[2] + t * dir.z, m);
    return q;
  }
  PastingAngles shifted = q;
  for (double& phi : shifted.phi) phi = reduce_angle(phi + m / 2, m);
  const double* lhs = q.phi;
  const double* rhs = shifted.phi;
  for (int i = 0; i < 3; ++i) {
    if (lhs[i] < rhs[i]) return q;
    if (rhs[i] < lhs[i]) return shifted;
  }
  return q;
}

}  // namespace sphrep
