#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sphrep/rng.h"
#include "sphrep/rotations.h"

using namespace sphrep;

static Rotation3 mat(std::array<double, 9> m) {
  Rotation3 r;
  r.m = m;
  return r;
}

TEST_CASE("axis angle matrices against hand-written matrices") {
  // quarter turn about z: e1 -> e2
  Rotation3 rz = rot3_from_axis_angle({0, 0, 1}, kPi / 2);
  CHECK(rotation_distance(rz, mat({0, -1, 0, 1, 0, 0, 0, 0, 1})) < 1e-15);
  // half turn about x
  Rotation3 rx = rot3_from_axis_angle({1, 0, 0}, kPi);
  CHECK(rotation_distance(rx, mat({1, 0, 0, 0, -1, 0, 0, 0, -1})) < 1e-15);
  // counter-clockwise seen from the axis tip: z by +pi/2 sends e1 to e2
  Vec3 v = apply(rz, {1, 0, 0});
  CHECK(norm(v - Vec3{0, 1, 0}) < 1e-15);
}

TEST_CASE("non-unit axis is rejected") {
  CHECK_THROWS_AS(rot3_from_axis_angle({1, 1e-4, 0}, 1.0), std::domain_error);
  CHECK_THROWS_AS(spin_from_axis_angle({0.5, 0, 0}, 1.0), std::domain_error);
  CHECK_NOTHROW(rot3_from_axis_angle({1, 0, 0}, 1.0));
}

TEST_CASE("spin from axis angle") {
  Spin q = spin_from_axis_angle({1, 0, 0}, kPi / 2);
  CHECK(q.w == doctest::Approx(std::cos(kPi / 4)).epsilon(1e-15));
  CHECK(q.x == doctest::Approx(std::sin(kPi / 4)).epsilon(1e-15));
  CHECK(q.y == 0);
  CHECK(q.z == 0);
}

TEST_CASE("quaternion product convention: j * i = -k") {
  Spin i{0, 1, 0, 0}, j{0, 0, 1, 0};
  Spin ji = compose(j, i);
  CHECK(rotation_distance(ji, Spin{0, 0, 0, -1}) < 1e-15);
}

TEST_CASE("project and lift examples") {
  // (0,1,0,0) projects to the half turn about e1
  Rotation3 r = project(Spin{0, 1, 0, 0});
  CHECK(rotation_distance(r, mat({1, 0, 0, 0, -1, 0, 0, 0, -1})) < 1e-15);
  // canonical lift of the half turn about e3 picks the +k sheet
  Spin q = lift(rot3_from_axis_angle({0, 0, 1}, kPi));
  CHECK(rotation_distance(q, Spin{0, 0, 0, 1}) < 1e-12);
  // scalar-positive rule away from ties
  Spin p = lift(rot3_from_axis_angle({0, 1, 0}, 2.0));
  CHECK(p.w > 0);
}

TEST_CASE("negate is the other sheet of the same rotation") {
  Spin q = spin_from_axis_angle({0, 1, 0}, 1.25);
  Spin n = negate(q);
  CHECK(rotation_distance(project(q), project(n)) < 1e-15);
  // normal representation of the negated sheet: (-axis, 2*pi - angle)
  Spin m = spin_from_axis_angle({0, -1, 0}, kTwoPi - 1.25);
  CHECK(rotation_distance(n, m) < 1e-12);
}

TEST_CASE("rotation distances") {
  Rotation3 id = rot3_identity();
  Rotation3 rz = rot3_from_axis_angle({0, 0, 1}, kPi);
  CHECK(rotation_distance(id, rz) == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(rotation_distance(Spin{1, 0, 0, 0}, Spin{-1, 0, 0, 0}) == doctest::Approx(2.0));
}

TEST_CASE("reduce angle") {
  CHECK(reduce_angle(kTwoPi, kTwoPi) == 0);
  CHECK(reduce_angle(-1e-15, kTwoPi) == 0);  // wrap guard at the seam
  CHECK(reduce_angle(kTwoPi - 1e-13, kTwoPi) == 0);
  CHECK(reduce_angle(3 * kPi, kTwoPi) == doctest::Approx(kPi));
  CHECK(reduce_angle(5 * kPi, kFourPi) == doctest::Approx(kPi));
  CHECK(reduce_angle(-kPi / 2, kFourPi) == doctest::Approx(3.5 * kPi));
}

TEST_CASE("canonical axis angle") {
  AxisAngle aa = canonical_axis_angle(rot3_from_axis_angle({0, 0, 1}, 3 * kPi / 2));
  CHECK(aa.angle == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(norm(aa.axis - Vec3{0, 0, -1}) < 1e-12);
  // angle pi: first nonzero axis coordinate positive
  AxisAngle bb = canonical_axis_angle(rot3_from_axis_angle({0, -1, 0}, kPi));
  CHECK(bb.angle == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(norm(bb.axis - Vec3{0, 1, 0}) < 1e-9);
  AxisAngle cc = canonical_axis_angle(rot3_identity());
  CHECK(cc.angle == 0);
  CHECK(norm(cc.axis - Vec3{0, 0, 1}) == 0);
}

TEST_CASE("random round trips and homomorphism") {
  double worst_pl = 0, worst_hom = 0, worst_conj = 0, worst_lp = 0;
  for (int k = 0; k < 1000; ++k) {
    SampleRng rng(20260822, k);
    Vec3 a1 = rng.unit_vector(), a2 = rng.unit_vector();
    double t1 = rng.uniform(0, kFourPi), t2 = rng.uniform(0, kFourPi);
    Spin q1 = spin_from_axis_angle(a1, t1), q2 = spin_from_axis_angle(a2, t2);

    // project is a homomorphism
    worst_hom = std::max(worst_hom, rotation_distance(project(compose(q1, q2)),
                                                      compose(project(q1), project(q2))));
    // project(lift(r)) == r
    Rotation3 r = project(q1);
    worst_pl = std::max(worst_pl, rotation_distance(project(lift(r)), r));
    // lift lands on one of the two sheets
    Spin l = lift(r);
    worst_lp = std::max(worst_lp, std::min(rotation_distance(l, q1),
                                           rotation_distance(l, negate(q1))));
    // matrix action agrees with quaternion conjugation
    Vec3 v = rng.unit_vector();
    Spin qv = compose(compose(q1, Spin{0, v.x, v.y, v.z}), inverse(q1));
    worst_conj = std::max(worst_conj, norm(apply(r, v) - Vec3{qv.x, qv.y, qv.z}));
  }
  CHECK(worst_hom < 1e-14);
  CHECK(worst_pl < 1e-13);
  CHECK(worst_lp < 1e-13);
  CHECK(worst_conj < 1e-14);
}

TEST_CASE("compose applies the right factor first") {
  Rotation3 rx = rot3_from_axis_angle({1, 0, 0}, kPi / 2);
  Rotation3 rz = rot3_from_axis_angle({0, 0, 1}, kPi / 2);
  // rz first, then rx: e1 -> e2 -> e3
  Vec3 v = apply(compose(rx, rz), {1, 0, 0});
  CHECK(norm(v - Vec3{0, 0, 1}) < 1e-15);
}
