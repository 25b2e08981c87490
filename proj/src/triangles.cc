#include "sphrep/triangles.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sphrep {

namespace {

constexpr double kAngleEps = 1e-12;
constexpr double kInteriorMargin = 1e-9;

double clamp01(double x) { return std::min(1.0, std::max(-1.0, x)); }

double checked_angle(double x, const char* what) {
  if (x < -kAngleEps || x > kPi + kAngleEps)
    throw std::domain_error(std::string(what) + ": angle outside [0, pi]");
  return std::min(kPi, std::max(0.0, x));
}

}  // namespace

AngleTriple make_angle_triple(double a, double b, double c) {
  return {checked_angle(a, "angle triple"), checked_angle(b, "angle triple"),
          checked_angle(c, "angle triple")};
}

std::string region_tag_name(RegionTag t) {
  switch (t) {
    case RegionTag::Interior: return "Interior";
    case RegionTag::a: return "a";
    case RegionTag::b: return "b";
    case RegionTag::c: return "c";
    case RegionTag::d: return "d";
    case RegionTag::A: return "A";
    case RegionTag::Ap: return "A'";
    case RegionTag::B: return "B";
    case RegionTag::Bp: return "B'";
    case RegionTag::C: return "C";
    case RegionTag::Cp: return "C'";
    case RegionTag::I: return "I";
    case RegionTag::II: return "II";
    case RegionTag::III: return "III";
    case RegionTag::IV: return "IV";
  }
  return "?";
}

bool Region::has(RegionTag t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

std::string Region::name() const {
  if (is_interior()) return "Interior";
  if (tags.size() == 1) return region_tag_name(tags[0]);
  std::string out = tags.size() == 2 ? "EdgeOf(" : "VertexOf(";
  for (size_t i = 0; i < tags.size(); ++i) {
    if (i) out += ",";
    out += region_tag_name(tags[i]);
  }
  return out + ")";
}

namespace {

// 1-cells of the blown-up boundary: which pairs of 2-cells share an edge.
constexpr std::pair<RegionTag, RegionTag> kEdgePairs[] = {
    {RegionTag::a, RegionTag::Ap}, {RegionTag::a, RegionTag::Bp},
    {RegionTag::a, RegionTag::Cp}, {RegionTag::b, RegionTag::A},
    {RegionTag::b, RegionTag::B},  {RegionTag::b, RegionTag::Cp},
    {RegionTag::c, RegionTag::A},  {RegionTag::c, RegionTag::Bp},
    {RegionTag::c, RegionTag::C},  {RegionTag::d, RegionTag::Ap},
    {RegionTag::d, RegionTag::B},  {RegionTag::d, RegionTag::C},
    {RegionTag::A, RegionTag::I},  {RegionTag::A, RegionTag::IV},
    {RegionTag::Ap, RegionTag::II}, {RegionTag::Ap, RegionTag::III},
    {RegionTag::B, RegionTag::I},  {RegionTag::B, RegionTag::II},
    {RegionTag::Bp, RegionTag::III}, {RegionTag::Bp, RegionTag::IV},
    {RegionTag::C, RegionTag::I},  {RegionTag::C, RegionTag::III},
    {RegionTag::Cp, RegionTag::II}, {RegionTag::Cp, RegionTag::IV},
};

// 0-cells: the four 2-cells meeting at each of the twelve corners.
constexpr std::array<RegionTag, 4> kVertexSets[] = {
    {RegionTag::a, RegionTag::Ap, RegionTag::Cp, RegionTag::II},
    {RegionTag::a, RegionTag::Ap, RegionTag::Bp, RegionTag::III},
    {RegionTag::a, RegionTag::Bp, RegionTag::Cp, RegionTag::IV},
    {RegionTag::b, RegionTag::A, RegionTag::B, RegionTag::I},
    {RegionTag::b, RegionTag::B, RegionTag::Cp, RegionTag::II},
    {RegionTag::b, RegionTag::A, RegionTag::Cp, RegionTag::IV},
    {RegionTag::c, RegionTag::A, RegionTag::C, RegionTag::I},
    {RegionTag::c, RegionTag::Bp, RegionTag::C, RegionTag::III},
    {RegionTag::c, RegionTag::A, RegionTag::Bp, RegionTag::IV},
    {RegionTag::d, RegionTag::B, RegionTag::C, RegionTag::I},
    {RegionTag::d, RegionTag::Ap, RegionTag::B, RegionTag::II},
    {RegionTag::d, RegionTag::Ap, RegionTag::C, RegionTag::III},
};

bool edge_ok(RegionTag x, RegionTag y) {
  for (auto [p, q] : kEdgePairs)
    if ((p == x && q == y) || (p == y && q == x)) return true;
  return false;
}

bool vertex_ok(const std::vector<RegionTag>& tags) {
  for (const auto& vs : kVertexSets) {
    bool all = true;
    for (RegionTag t : tags)
      if (std::find(vs.begin(), vs.end(), t) == vs.end()) { all = false; break; }
    if (all) return true;
  }
  return false;
}

}  // namespace

Region classify_region(const SixTuple& s, double eps) {
  auto lo = [&](double x) { return x <= eps; };
  auto hi = [&](double x) { return x >= kPi - eps; };
  std::vector<RegionTag> tags;
  if (lo(s.l0) && lo(s.l1) && lo(s.l2)) tags.push_back(RegionTag::a);
  if (hi(s.l0) && lo(s.l1) && hi(s.l2)) tags.push_back(RegionTag::b);
  if (lo(s.l0) && hi(s.l1) && hi(s.l2)) tags.push_back(RegionTag::c);
  if (hi(s.l0) && hi(s.l1) && lo(s.l2)) tags.push_back(RegionTag::d);
  if (hi(s.l2) && hi(s.v2)) tags.push_back(RegionTag::A);
  if (lo(s.l2) && lo(s.v2)) tags.push_back(RegionTag::Ap);
  if (hi(s.v0) && hi(s.l0)) tags.push_back(RegionTag::B);
  if (lo(s.v0) && lo(s.l0)) tags.push_back(RegionTag::Bp);
  if (hi(s.v1) && hi(s.l1)) tags.push_back(RegionTag::C);
  if (lo(s.v1) && lo(s.l1)) tags.push_back(RegionTag::Cp);
  if (hi(s.v0) && hi(s.v1) && hi(s.v2)) tags.push_back(RegionTag::I);
  if (hi(s.v0) && lo(s.v1) && lo(s.v2)) tags.push_back(RegionTag::II);
  if (lo(s.v0) && hi(s.v1) && lo(s.v2)) tags.push_back(RegionTag::III);
  if (lo(s.v0) && lo(s.v1) && hi(s.v2) && std::abs(s.l2 - (s.l0 + s.l1)) <= eps)
    tags.push_back(RegionTag::IV);

  if (tags.empty()) return Region{{RegionTag::Interior}};
  if (tags.size() == 1) return Region{tags};
  if (tags.size() == 2) {
    if (!edge_ok(tags[0], tags[1]))
      throw std::runtime_error("classify_region: ambiguous tags " +
                               region_tag_name(tags[0]) + "," + region_tag_name(tags[1]));
    return Region{tags};
  }
  if (!vertex_ok(tags)) {
    std::string msg = "classify_region: ambiguous tags ";
    for (RegionTag t : tags) msg += region_tag_name(t) + " ";
    throw std::runtime_error(msg);
  }
  return Region{tags};
}

bool in_tetrahedron(const AngleTriple& t, double margin) {
  return t.t0 + t.t1 + t.t2 >= kPi + margin &&
         t.t0 >= t.t1 + t.t2 - kPi + margin &&
         t.t1 >= t.t0 + t.t2 - kPi + margin &&
         t.t2 >= t.t0 + t.t1 - kPi + margin;
}

AngleTriple kappa(const AngleTriple& t) { return {t.t0, kPi - t.t1, t.t2}; }

bool in_octahedron(const AngleTriple& t, double margin) {
  return in_tetrahedron(t, margin) && in_tetrahedron(kappa(t), margin);
}

AngleTriple simplex_to_tetra(const std::array<double, 3>& x) {
  for (double xi : x)
    if (xi < -kInteriorMargin) throw std::domain_error("simplex_to_tetra: negative coordinate");
  if (x[0] + x[1] + x[2] > kPi + kInteriorMargin)
    throw std::domain_error("simplex_to_tetra: coordinate sum exceeds pi");
  return make_angle_triple(kPi - x[1] - x[2], kPi - x[0] - x[2], kPi - x[0] - x[1]);
}

Vec3 theta_arc_dir(double theta) { return {0, -std::cos(theta), std::sin(theta)}; }

std::array<double, 3> lengths_from_angles(const AngleTriple& t) {
  auto side = [](double ti, double tj, double tk) {
    double num = std::cos(ti) + std::cos(tj) * std::cos(tk);
    double den = std::sin(tj) * std::sin(tk);
    return std::acos(clamp01(num / den));
  };
  return {side(t.t0, t.t1, t.t2), side(t.t1, t.t2, t.t0), side(t.t2, t.t0, t.t1)};
}

namespace {

// Shared placement: v0 at (1,0,0), v1 on the equator at arc l2 (going through
// (0,-1,0)), v2 at arc l1 along the great circle leaving v0 at angle v(0).
GeneralizedTriangle place(TriangleKind kind, const AngleTriple& ang,
                          std::array<double, 3> len) {
  GeneralizedTriangle tri;
  tri.kind = kind;
  tri.angles = ang;
  tri.length = len;
  tri.vertex[0] = {1, 0, 0};
  tri.vertex[1] = {std::cos(len[2]), -std::sin(len[2]), 0};
  Vec3 w = theta_arc_dir(ang.t0);
  tri.vertex[2] = std::cos(len[1]) * Vec3{1, 0, 0} + std::sin(len[1]) * w;
  return tri;
}

}  // namespace

GeneralizedTriangle triangle_from_angles(const AngleTriple& t) {
  if (!in_tetrahedron(t, kInteriorMargin))
    throw std::domain_error("triangle_from_angles: triple not strictly interior");
  GeneralizedTriangle tri = place(TriangleKind::Nondegenerate, t, lengths_from_angles(t));
  return tri;
}

SixTuple coordinates(const GeneralizedTriangle& tri) {
  return {tri.angles.t0, tri.angles.t1, tri.angles.t2,
          tri.length[0], tri.length[1], tri.length[2]};
}

std::array<double, 3> measured_lengths(const GeneralizedTriangle& tri) {
  auto d = [&](int i, int j) {
    return std::acos(clamp01(dot(tri.vertex[i], tri.vertex[j])));
  };
  return {d(1, 2), d(2, 0), d(0, 1)};
}

AngleTriple measured_angles(const GeneralizedTriangle& tri) {
  auto corner = [&](int i, int j, int k) {
    Vec3 vi = tri.vertex[i];
    Vec3 tj = normalized(tri.vertex[j] - dot(vi, tri.vertex[j]) * vi);
    Vec3 tk = normalized(tri.vertex[k] - dot(vi, tri.vertex[k]) * vi);
    return std::acos(clamp01(dot(tj, tk)));
  };
  return {corner(0, 1, 2), corner(1, 2, 0), corner(2, 0, 1)};
}

namespace {

TriangleKind kind_for(RegionTag t) {
  switch (t) {
    case RegionTag::Interior: return TriangleKind::Nondegenerate;
    case RegionTag::a: return TriangleKind::PointedPoint;
    case RegionTag::b:
    case RegionTag::c:
    case RegionTag::d:
    case RegionTag::A:
    case RegionTag::B:
    case RegionTag::C: return TriangleKind::PointedLune;
    case RegionTag::I: return TriangleKind::PointedHemisphere;
    default: return TriangleKind::PointedSegment;
  }
}

// Snap the coordinates a region pins exactly so the placement is on-locus.
SixTuple snap(SixTuple s, RegionTag t) {
  switch (t) {
    case RegionTag::Interior: break;
    case RegionTag::a: s.l0 = s.l1 = s.l2 = 0; break;
    case RegionTag::b: s.l0 = s.l2 = kPi; s.l1 = 0; break;
    case RegionTag::c: s.l1 = s.l2 = kPi; s.l0 = 0; break;
    case RegionTag::d: s.l0 = s.l1 = kPi; s.l2 = 0; break;
    case RegionTag::A: s.l2 = kPi; s.v2 = kPi; break;
    case RegionTag::Ap: s.l2 = 0; s.v2 = 0; break;
    case RegionTag::B: s.v0 = kPi; s.l0 = kPi; break;
    case RegionTag::Bp: s.v0 = 0; s.l0 = 0; break;
    case RegionTag::C: s.v1 = kPi; s.l1 = kPi; break;
    case RegionTag::Cp: s.v1 = 0; s.l1 = 0; break;
    case RegionTag::I: s.v0 = s.v1 = s.v2 = kPi; break;
    case RegionTag::II: s.v0 = kPi; s.v1 = s.v2 = 0; break;
    case RegionTag::III: s.v1 = kPi; s.v0 = s.v2 = 0; break;
    case RegionTag::IV: s.v2 = kPi; s.v0 = s.v1 = 0; break;
  }
  return s;
}

}  // namespace

GeneralizedTriangle representative(const SixTuple& s0) {
  Region r = classify_region(s0);
  if (r.is_interior())
    return triangle_from_angles(make_angle_triple(s0.v0, s0.v1, s0.v2));
  SixTuple s = s0;
  for (RegionTag t : r.tags) s = snap(s, t);
  AngleTriple ang = make_angle_triple(s.v0, s.v1, s.v2);
  GeneralizedTriangle tri =
      place(kind_for(r.tags[0]), ang, {s.l0, s.l1, s.l2});
  if (tri.kind == TriangleKind::PointedPoint) {
    tri.inf_dir[1] = theta_arc_dir(ang.t0);
    tri.inf_dir[2] = Vec3{0, -1, 0};
  }
  return tri;
}

GeneralizedTriangle representative_from_angles(const AngleTriple& t) {
  if (!in_tetrahedron(t, -kInteriorMargin))
    throw std::domain_error("representative_from_angles: triple outside the tetrahedron");
  if (in_tetrahedron(t, kInteriorMargin)) return triangle_from_angles(t);

  const double tol = kInteriorMargin;
  auto lo = [&](double x) { return x <= tol; };
  auto hi = [&](double x) { return x >= kPi - tol; };
  const double h = kPi / 2;

  const double q = kPi / 4;
  // G vertices blow up to the vertex regions; interior tie coordinates.
  if (hi(t.t0) && hi(t.t1) && hi(t.t2))
    return representative({kPi, kPi, kPi, 2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3});
  if (hi(t.t0) && lo(t.t1) && lo(t.t2)) return representative({kPi, 0, 0, h, q, q});
  if (lo(t.t0) && hi(t.t1) && lo(t.t2)) return representative({0, kPi, 0, q, h, q});
  if (lo(t.t0) && lo(t.t1) && hi(t.t2)) return representative({0, 0, kPi, q, q, h});
  // G edges blow up to the rectangles; mid-segment marked point. The paired
  // angles are equal on the edge; symmetrize against input noise.
  if (hi(t.t2)) {
    double m = 0.5 * (t.t0 + t.t1);
    return representative({m, m, kPi, h, h, kPi});
  }
  if (lo(t.t2)) {
    double m = 0.5 * (t.t0 + (kPi - t.t1));
    return representative({m, kPi - m, 0, h, h, 0});
  }
  if (hi(t.t0)) {
    double m = 0.5 * (t.t1 + t.t2);
    return representative({kPi, m, m, kPi, h, h});
  }
  if (lo(t.t0)) {
    double m = 0.5 * (t.t1 + (kPi - t.t2));
    return representative({0, m, kPi - m, 0, h, h});
  }
  if (hi(t.t1)) {
    double m = 0.5 * (t.t0 + t.t2);
    return representative({m, kPi, m, h, kPi, h});
  }
  if (lo(t.t1)) {
    double m = 0.5 * (t.t0 + (kPi - t.t2));
    return representative({m, 0, kPi - m, h, 0, h});
  }
  // Faces of G.
  double sum = t.t0 + t.t1 + t.t2;
  if (std::abs(sum - kPi) <= tol) return representative({t.t0, t.t1, t.t2, 0, 0, 0});
  if (std::abs(t.t1 - (t.t0 + t.t2 - kPi)) <= tol)
    return representative({t.t0, t.t1, t.t2, kPi, 0, kPi});
  if (std::abs(t.t0 - (t.t1 + t.t2 - kPi)) <= tol)
    return representative({t.t0, t.t1, t.t2, 0, kPi, kPi});
  if (std::abs(t.t2 - (t.t0 + t.t1 - kPi)) <= tol)
    return representative({t.t0, t.t1, t.t2, kPi, kPi, 0});
  // Numerically on the boundary but matching no locus at tol: treat interior.
  return triangle_from_angles(t);
}

GeneralizedTriangle standard_position(const GeneralizedTriangle& tri) {
  return representative(coordinates(tri));
}

}  // namespace sphrep
