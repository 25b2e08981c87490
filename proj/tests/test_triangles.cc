#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "sphrep/rng.h"
#include "sphrep/rotations.h"
#include "sphrep/triangles.h"

using namespace sphrep;

namespace {

double vdist(const Vec3& a, const Vec3& b) { return norm(a - b); }

AngleTriple sample_tetra(SampleRng& rng, double margin) {
  for (int tries = 0; tries < 10000; ++tries) {
    AngleTriple t{rng.uniform(0, kPi), rng.uniform(0, kPi), rng.uniform(0, kPi)};
    if (in_tetrahedron(t, margin)) return t;
  }
  throw std::runtime_error("sample_tetra: rejection failed");
}

}  // namespace

TEST_CASE("right-angled triple has the classical side lengths") {
  // Dual law: cos l0 = (cos t0 + cos t1 cos t2) / (sin t1 sin t2).
  AngleTriple t{3 * kPi / 4, kPi / 2, kPi / 2};
  auto l = lengths_from_angles(t);
  CHECK(std::abs(l[0] - 3 * kPi / 4) < 1e-12);
  CHECK(std::abs(l[1] - kPi / 2) < 1e-12);
  CHECK(std::abs(l[2] - kPi / 2) < 1e-12);
}

TEST_CASE("octant triangle is placed on the coordinate frame") {
  AngleTriple t{kPi / 2, kPi / 2, kPi / 2};
  GeneralizedTriangle tri = triangle_from_angles(t);
  CHECK(tri.kind == TriangleKind::Nondegenerate);
  CHECK(vdist(tri.vertex[0], {1, 0, 0}) < 1e-12);
  CHECK(vdist(tri.vertex[1], {0, -1, 0}) < 1e-12);
  CHECK(vdist(tri.vertex[2], {0, 0, 1}) < 1e-12);
}

TEST_CASE("equilateral three-quarters triple") {
  double th = 2 * kPi / 3;
  auto l = lengths_from_angles({th, th, th});
  // cos l = (c + c^2)/s^2 with c = -1/2: l = acos(-1/3)... compute directly.
  double expect = std::acos((-0.5 + 0.25) / 0.75);
  for (double li : l) CHECK(std::abs(li - expect) < 1e-12);
}

TEST_CASE("triangle_from_angles rejects boundary and exterior triples") {
  CHECK_THROWS_AS(triangle_from_angles({kPi / 3, kPi / 3, kPi / 3}), std::domain_error);
  CHECK_THROWS_AS(triangle_from_angles({kPi / 2, kPi / 2, kPi}), std::domain_error);
}

TEST_CASE("tetrahedron membership and kappa") {
  CHECK(in_tetrahedron({kPi / 2, kPi / 2, kPi / 2}, 1e-9));
  CHECK(!in_tetrahedron({kPi / 4, kPi / 4, kPi / 4}, 0));
  // Sum exactly pi sits on the boundary.
  CHECK(in_tetrahedron({kPi / 3, kPi / 3, kPi / 3}, -1e-12));
  AngleTriple t{0.9, 1.1, 1.8};
  AngleTriple k = kappa(t);
  CHECK(k.t0 == t.t0);
  CHECK(std::abs(k.t1 - (kPi - 1.1)) < 1e-15);
  CHECK(k.t2 == t.t2);
  CHECK(std::abs(kappa(kappa(t)).t1 - t.t1) < 1e-15);
  // Octahedron: kappa-invariant subpolytope.
  AngleTriple c{kPi / 2, kPi / 2, kPi / 2};
  CHECK(in_octahedron(c, 1e-9));
  CHECK(in_octahedron(kappa(c), 1e-9));
  CHECK(!in_octahedron({2.9, 2.9, 2.9}, 0));  // in G, not in kappa(G)
}

TEST_CASE("simplex_to_tetra maps the standard simplex onto the tetrahedron") {
  AngleTriple v = simplex_to_tetra({0, 0, 0});
  CHECK(std::abs(v.t0 - kPi) < 1e-15);
  CHECK(std::abs(v.t1 - kPi) < 1e-15);
  CHECK(std::abs(v.t2 - kPi) < 1e-15);
  AngleTriple e0 = simplex_to_tetra({kPi, 0, 0});
  CHECK(std::abs(e0.t0 - kPi) < 1e-15);
  CHECK(std::abs(e0.t1) < 1e-15);
  CHECK(std::abs(e0.t2) < 1e-15);
  CHECK_THROWS_AS(simplex_to_tetra({2.0, 2.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(simplex_to_tetra({-0.5, 0.1, 0.1}), std::domain_error);
  SampleRng rng(77, 0);
  for (int i = 0; i < 200; ++i) {
    double x0 = rng.uniform(0, kPi), x1 = rng.uniform(0, kPi - x0);
    double x2 = rng.uniform(0, kPi - x0 - x1);
    CHECK(in_tetrahedron(simplex_to_tetra({x0, x1, x2}), -1e-9));
  }
}

TEST_CASE("classify_region names the fourteen loci") {
  double t = 1.0, u = 2.0;
  auto one = [](const SixTuple& s) {
    Region r = classify_region(s);
    REQUIRE(r.tags.size() == 1);
    return r.tags[0];
  };
  CHECK(classify_region({1.0, 1.2, 1.4, 2.0, 2.1, 2.2}).is_interior());
  CHECK(one({t, u, t + u, 0, 0, 0}) == RegionTag::a);
  CHECK(one({t + u - kPi + 0.2, 0.2, u, kPi, 0, kPi}) == RegionTag::b);
  CHECK(one({0.2, t, u, 0, kPi, kPi}) == RegionTag::c);
  CHECK(one({t, u, 0.2, kPi, kPi, 0}) == RegionTag::d);
  CHECK(one({t, t, kPi, 1.0, 1.0, kPi}) == RegionTag::A);
  CHECK(one({t, kPi - t, 0, 1.0, 1.0, 0}) == RegionTag::Ap);
  CHECK(one({kPi, t, t, kPi, 1.0, 1.0}) == RegionTag::B);
  CHECK(one({0, t, kPi - t, 0, 1.0, 1.0}) == RegionTag::Bp);
  CHECK(one({t, kPi, t, 1.0, kPi, 1.0}) == RegionTag::C);
  CHECK(one({t, 0, kPi - t, 1.0, 0, 1.0}) == RegionTag::Cp);
  CHECK(one({kPi, kPi, kPi, u, u, u}) == RegionTag::I);
  CHECK(one({kPi, 0, 0, 1.0, 0.5, 0.5}) == RegionTag::II);
  CHECK(one({0, kPi, 0, 0.5, 1.0, 0.5}) == RegionTag::III);
  CHECK(one({0, 0, kPi, 0.5, 0.5, 1.0}) == RegionTag::IV);
}

TEST_CASE("classify_region reports edges and corners of the blowup") {
  Region e = classify_region({1.0, 1.0, kPi, kPi, 0, kPi});
  REQUIRE(e.tags.size() == 2);
  CHECK(e.name() == "EdgeOf(b,A)");
  Region f = classify_region({kPi, 0, 0, kPi, kPi / 2, kPi / 2});
  CHECK(f.name() == "EdgeOf(B,II)");  // segment limit of B-lunes
  Region v = classify_region({kPi, kPi, kPi, kPi, 0, kPi});
  REQUIRE(v.tags.size() == 4);
  CHECK(v.name() == "VertexOf(b,A,B,I)");
  // Tag pairs that share no edge are a malformed coordinate tuple.
  CHECK_THROWS_AS(classify_region({kPi, 1.0, kPi, kPi, 1.0, kPi}), std::runtime_error);
}

TEST_CASE("classify_region honors the tolerance argument") {
  SixTuple s{1.0, 2.0, 2.9, 1e-5, 1e-5, 1e-5};
  CHECK(classify_region(s, 1e-7).is_interior());
  CHECK(classify_region(s, 1e-4).has(RegionTag::a));
}

TEST_CASE("representative_from_angles: interior round trip") {
  SampleRng rng(20260822, 5);
  for (int i = 0; i < 1000; ++i) {
    AngleTriple t = sample_tetra(rng, 1e-3);
    GeneralizedTriangle tri = representative_from_angles(t);
    REQUIRE(tri.kind == TriangleKind::Nondegenerate);
    AngleTriple m = measured_angles(tri);
    CHECK(std::abs(m.t0 - t.t0) < 1e-9);
    CHECK(std::abs(m.t1 - t.t1) < 1e-9);
    CHECK(std::abs(m.t2 - t.t2) < 1e-9);
    auto ml = measured_lengths(tri);
    auto dl = lengths_from_angles(t);
    for (int j = 0; j < 3; ++j) CHECK(std::abs(ml[j] - dl[j]) < 1e-9);
    // Unit vertices, oriented clockwise seen from outside (positive triple
    // product convention fixed by the octant example).
    for (int j = 0; j < 3; ++j) CHECK(std::abs(norm(tri.vertex[j]) - 1) < 1e-12);
  }
}

TEST_CASE("representative_from_angles: degenerate loci") {
  // Edge of G with both face inequalities active: theta2 = pi forces
  // theta0 = theta1, the lune locus.
  GeneralizedTriangle lune = representative_from_angles({1.3, 1.3, kPi});
  CHECK(lune.kind == TriangleKind::PointedLune);
  CHECK(classify_region(coordinates(lune)).has(RegionTag::A));
  CHECK(vdist(lune.vertex[1], {-1, 0, 0}) < 1e-12);
  CHECK(std::abs(lune.length[1] - kPi / 2) < 1e-12);

  GeneralizedTriangle halfpi = representative_from_angles({kPi / 2, kPi / 2, kPi});
  CHECK(classify_region(coordinates(halfpi)).has(RegionTag::A));
  CHECK(std::abs(halfpi.angles.t0 - kPi / 2) < 1e-12);
  CHECK(vdist(halfpi.vertex[2], {0, 0, 1}) < 1e-12);

  GeneralizedTriangle seg = representative_from_angles({1.0, kPi - 1.0, 0});
  CHECK(seg.kind == TriangleKind::PointedSegment);
  CHECK(classify_region(coordinates(seg)).has(RegionTag::Ap));
  CHECK(vdist(seg.vertex[1], seg.vertex[0]) < 1e-12);

  GeneralizedTriangle blune = representative_from_angles({kPi, 0.7, 0.7});
  CHECK(classify_region(coordinates(blune)).has(RegionTag::B));
  CHECK(vdist(blune.vertex[1] + blune.vertex[2], {0, 0, 0}) < 1e-12);

  GeneralizedTriangle point = representative_from_angles({0.5, 0.7, kPi - 1.2});
  CHECK(point.kind == TriangleKind::PointedPoint);
  CHECK(classify_region(coordinates(point)).has(RegionTag::a));
  CHECK(vdist(point.vertex[1], point.vertex[0]) < 1e-12);
  CHECK(vdist(point.vertex[2], point.vertex[0]) < 1e-12);
  CHECK(point.inf_dir[1].has_value());
  CHECK(vdist(*point.inf_dir[1], theta_arc_dir(0.5)) < 1e-12);

  GeneralizedTriangle faceb = representative_from_angles({2.5, 2.5 + 1.5 - kPi, 1.5});
  CHECK(classify_region(coordinates(faceb)).has(RegionTag::b));
  CHECK(vdist(faceb.vertex[1], {-1, 0, 0}) < 1e-12);
  CHECK(vdist(faceb.vertex[2], faceb.vertex[0]) < 1e-12);

  GeneralizedTriangle hemi = representative_from_angles({kPi, kPi, kPi});
  CHECK(hemi.kind == TriangleKind::PointedHemisphere);
  for (int j = 0; j < 3; ++j) CHECK(std::abs(hemi.vertex[j].z) < 1e-12);
  auto hl = measured_lengths(hemi);
  for (int j = 0; j < 3; ++j) CHECK(std::abs(hl[j] - 2 * kPi / 3) < 1e-12);

  GeneralizedTriangle segIV = representative_from_angles({0, 0, kPi});
  CHECK(segIV.kind == TriangleKind::PointedSegment);
  CHECK(classify_region(coordinates(segIV)).has(RegionTag::IV));

  CHECK_THROWS_AS(representative_from_angles({0.3, 0.3, 0.3}), std::domain_error);
}

TEST_CASE("representative pins exact coordinates from noisy input") {
  // 1e-8-level dirt on a lune tuple snaps onto the locus.
  SixTuple noisy{1.3, 1.3 + 1e-8, kPi - 1e-8, 1.0, 1.0, kPi - 1e-8};
  GeneralizedTriangle tri = representative(noisy);
  CHECK(tri.length[2] == kPi);
  CHECK(tri.angles.t2 == kPi);
  CHECK(vdist(tri.vertex[1], {-1, 0, 0}) < 1e-12);
}

TEST_CASE("standard_position is idempotent") {
  SampleRng rng(99, 3);
  for (int i = 0; i < 200; ++i) {
    AngleTriple t = sample_tetra(rng, 1e-3);
    GeneralizedTriangle tri = triangle_from_angles(t);
    GeneralizedTriangle s1 = standard_position(tri);
    GeneralizedTriangle s2 = standard_position(s1);
    for (int j = 0; j < 3; ++j) CHECK(vdist(s1.vertex[j], s2.vertex[j]) < 1e-12);
  }
  GeneralizedTriangle lune = representative_from_angles({1.1, 1.1, kPi});
  GeneralizedTriangle again = standard_position(lune);
  for (int j = 0; j < 3; ++j) CHECK(vdist(lune.vertex[j], again.vertex[j]) < 1e-12);
}

TEST_CASE("make_angle_triple validates its range") {
  CHECK_THROWS_AS(make_angle_triple(-0.1, 1, 1), std::domain_error);
  CHECK_THROWS_AS(make_angle_triple(1, kPi + 0.1, 1), std::domain_error);
  AngleTriple t = make_angle_triple(kPi + 1e-13, -1e-13, 1);
  CHECK(t.t0 == kPi);
  CHECK(t.t1 == 0);
}
