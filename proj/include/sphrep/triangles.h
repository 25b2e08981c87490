#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sphrep/rotations.h"

// Generalized spherical triangles: honest clockwise triangles plus their
// degenerations (lunes, hemispheres, segments, points) with a marked point,
// coordinatized by the six-tuple (v(0),v(1),v(2),l(0),l(1),l(2)) of corner
// angles and opposite side lengths. The moduli space fibers over the angle
// tetrahedron G; the blown-up boundary decomposes into faces a-d, edge
// rectangles A,A',B,B',C,C' and vertex regions I-IV.

namespace sphrep {

struct AngleTriple {
  double t0 = 0, t1 = 0, t2 = 0;
};
// Validates each entry in [0, pi] within 1e-12 and clamps; domain error beyond.
AngleTriple make_angle_triple(double a, double b, double c);

enum class TriangleKind {
  Nondegenerate,
  PointedLune,
  PointedHemisphere,
  PointedSegment,
  PointedPoint,
};

struct SixTuple {
  double v0 = 0, v1 = 0, v2 = 0;  // corner angles
  double l0 = 0, l1 = 0, l2 = 0;  // side lengths, l(i) opposite v(i)
};

struct GeneralizedTriangle {
  TriangleKind kind = TriangleKind::Nondegenerate;
  std::array<Vec3, 3> vertex{{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}};
  AngleTriple angles;
  std::array<double, 3> length{0, 0, 0};
  // Direction of a collapsed edge where the placement makes one canonical.
  std::array<std::optional<Vec3>, 3> inf_dir;
};

enum class RegionTag { Interior, a, b, c, d, A, Ap, B, Bp, C, Cp, I, II, III, IV };
std::string region_tag_name(RegionTag t);

struct Region {
  std::vector<RegionTag> tags;  // sorted; {Interior} or 1 tag, 2 = edge, >=3 = vertex
  bool is_interior() const { return tags.size() == 1 && tags[0] == RegionTag::Interior; }
  bool has(RegionTag t) const;
  std::string name() const;  // "Interior", "A'", "EdgeOf(b,B)", "VertexOf(b,A,C',IV)"
};

inline constexpr double kRegionEps = 1e-7;

// Partition of the blown-up boundary at tolerance eps. Throws if the matched
// tags are not the faces of a single cell of the face lattice.
Region classify_region(const SixTuple& s, double eps = kRegionEps);

// Angle tetrahedron G = {sum >= pi, t_i >= t_j + t_k - pi}; margin shrinks it.
bool in_tetrahedron(const AngleTriple& t, double margin);
// kappa flips the middle angle: (t0, pi - t1, t2).
AngleTriple kappa(const AngleTriple& t);
// Octahedron O = G intersect kappa(G).
bool in_octahedron(const AngleTriple& t, double margin);
// Affine simplex chart: x in {x_i >= 0, sum <= pi} maps onto G.
AngleTriple simplex_to_tetra(const std::array<double, 3>& x);

// Tangent at (1,0,0) tilted angle theta from the equator into the upper
// hemisphere: (0, -cos theta, sin theta).
Vec3 theta_arc_dir(double theta);

// Strictly interior triple (margin 1e-9) -> nondegenerate triangle in standard
// position: v0 = (1,0,0), v1 on the lower-front equator arc, v2 upper.
GeneralizedTriangle triangle_from_angles(const AngleTriple& t);

SixTuple coordinates(const GeneralizedTriangle& tri);
AngleTriple measured_angles(const GeneralizedTriangle& tri);          // nondegenerate
std::array<double, 3> measured_lengths(const GeneralizedTriangle& tri);
// Side lengths from angles by the dual cosine law.
std::array<double, 3> lengths_from_angles(const AngleTriple& t);

// Canonical standard-position triangle with the given six-tuple (the pinned
// coordinates of its region are snapped exactly).
GeneralizedTriangle representative(const SixTuple& s);
// Canonical representative over an angle triple in G; degenerate regions get
// mid-segment / centered tie coordinates.
GeneralizedTriangle representative_from_angles(const AngleTriple& t);
// Standard position depends only on the isometry class (the six-tuple).
GeneralizedTriangle standard_position(const GeneralizedTriangle& tri);

}  // namespace sphrep
