#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"
#include "wigner/lorentz.hpp"

using namespace wigner;
using testutil::kDegPerRad;

TEST_CASE("boost matrix matches the closed form at half light speed") {
  const LorentzTransform b = boost_from_velocity({0.5, 0.0, 0.0});
  CHECK(b.m.m[0][0] == doctest::Approx(1.154700538379251529).epsilon(1e-15));
  CHECK(b.m.m[0][1] == doctest::Approx(0.57735026918962576451).epsilon(1e-15));
  CHECK(b.m.m[1][0] == doctest::Approx(0.57735026918962576451).epsilon(1e-15));
  CHECK(b.m.m[1][1] == doctest::Approx(1.154700538379251529).epsilon(1e-15));
  CHECK(b.m.m[2][2] == 1.0);
  CHECK(b.m.m[3][3] == 1.0);
  CHECK(b.m.m[2][3] == 0.0);
}

TEST_CASE("boost maps the rest four-velocity to (gamma, gamma v)") {
  const Velocity3 v{0.3, -0.2, 0.55};
  const Vec4 image = boost_from_velocity(v).m * Vec4{{1.0, 0.0, 0.0, 0.0}};
  const double g = v.gamma();
  CHECK(image[0] == doctest::Approx(g).epsilon(1e-15));
  CHECK(image[1] == doctest::Approx(g * v.x).epsilon(1e-15));
  CHECK(image[2] == doctest::Approx(g * v.y).epsilon(1e-15));
  CHECK(image[3] == doctest::Approx(g * v.z).epsilon(1e-15));
  const Velocity3 back = rest_frame_velocity(boost_from_velocity(v));
  CHECK(back.x == doctest::Approx(v.x).epsilon(1e-15));
  CHECK(back.y == doctest::Approx(v.y).epsilon(1e-15));
  CHECK(back.z == doctest::Approx(v.z).epsilon(1e-15));
}

TEST_CASE("constructed transforms preserve the metric") {
  auto rng = testutil::make_rng(11);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const LorentzTransform t =
        compose(compose(boost_from_velocity(testutil::random_velocity(rng)),
                        rotation_matrix(testutil::random_rotation(rng))),
                boost_from_velocity(testutil::random_velocity(rng)));
    worst = std::max(worst, metric_residual(t));
    CHECK(is_proper_orthochronous(t));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("inverse is the group inverse") {
  auto rng = testutil::make_rng(12);
  for (int i = 0; i < 200; ++i) {
    const LorentzTransform t =
        compose(boost_from_velocity(testutil::random_velocity(rng)),
                rotation_matrix(testutil::random_rotation(rng)));
    CHECK(max_abs_diff(compose(inverse(t), t).m, Mat4::identity()) < 1e-12);
    CHECK(max_abs_diff(compose(t, inverse(t)).m, Mat4::identity()) < 1e-12);
  }
  const Velocity3 v{0.4, 0.1, -0.3};
  CHECK(max_abs_diff(inverse(boost_from_velocity(v)).m,
                     boost_from_velocity(-v).m) < 1e-15);
}

TEST_CASE("superluminal and non-group inputs are rejected") {
  CHECK_THROWS_AS(boost_from_velocity({1.0, 0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(boost_from_velocity({0.8, 0.8, 0.0}), std::domain_error);
  CHECK_THROWS_AS(einstein_add({1.2, 0.0, 0.0}, {0.1, 0.0, 0.0}), std::domain_error);

  Mat4 scaled = Mat4::identity();
  scaled.m[0][0] = 2.0;
  CHECK_THROWS_AS(decompose_boost_rotation({scaled}), std::invalid_argument);

  Mat4 reversed = Mat4::identity();
  reversed.m[0][0] = -1.0;
  CHECK_THROWS_AS(decompose_boost_rotation({reversed}), std::invalid_argument);

  Mat4 parity = Mat4::identity();
  parity.m[1][1] = parity.m[2][2] = parity.m[3][3] = -1.0;
  CHECK(!is_proper_orthochronous({parity}));
  CHECK_THROWS_AS(decompose_boost_rotation({parity}), std::invalid_argument);
}

TEST_CASE("collinear boosts add without rotation") {
  const Velocity3 sum = einstein_add({0.5, 0.0, 0.0}, {0.5, 0.0, 0.0});
  CHECK(sum.x == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(sum.y == 0.0);
  CHECK(sum.z == 0.0);

  const RotationAxisAngle w = wigner_angle_two_boosts({0.3, 0.0, 0.0}, {0.6, 0.0, 0.0});
  CHECK(w.angle < 1e-12);
  CHECK(w.axis.z == 1.0);  // zero-rotation convention

  const RotationAxisAngle back = wigner_angle_two_boosts({0.5, 0.0, 0.0}, {-0.3, 0.0, 0.0});
  CHECK(back.angle < 1e-12);

  // Collinear boosts commute.
  const LorentzTransform ab = compose(boost_from_velocity({0.3, 0.0, 0.0}),
                                      boost_from_velocity({0.6, 0.0, 0.0}));
  const LorentzTransform ba = compose(boost_from_velocity({0.6, 0.0, 0.0}),
                                      boost_from_velocity({0.3, 0.0, 0.0}));
  CHECK(max_abs_diff(ab.m, ba.m) < 1e-15);
}

TEST_CASE("einstein addition matches the composed-boost rest velocity") {
  auto rng = testutil::make_rng(13);
  for (int i = 0; i < 200; ++i) {
    const Velocity3 u = testutil::random_velocity(rng);
    const Velocity3 v = testutil::random_velocity(rng);
    const Velocity3 sum = einstein_add(u, v);
    const Velocity3 composed = rest_frame_velocity(
        compose(boost_from_velocity(u), boost_from_velocity(v)));
    CHECK(norm(sum.vec() - composed.vec()) < 1e-14);
    CHECK(sum.speed() < 1.0);
  }
}

TEST_CASE("perpendicular equal-speed boosts give the reference rotation") {
  const RotationAxisAngle half = wigner_angle_two_boosts({0.5, 0.0, 0.0}, {0.0, 0.5, 0.0});
  CHECK(half.angle == doctest::Approx(0.1433475689053653576).epsilon(1e-12));
  CHECK(half.angle * kDegPerRad == doctest::Approx(8.213210701738188789).epsilon(1e-12));
  CHECK(half.axis.z == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(half.axis.x) < 1e-12);
  CHECK(std::abs(half.axis.y) < 1e-12);

  const RotationAxisAngle tenth = wigner_angle_two_boosts({0.1, 0.0, 0.0}, {0.0, 0.1, 0.0});
  CHECK(tenth.angle == doctest::Approx(0.0050251467773656021201).epsilon(1e-12));
  CHECK(tenth.angle * kDegPerRad == doctest::Approx(0.28791970177681571256).epsilon(1e-12));
}

TEST_CASE("rotation sense flips when the boosts are exchanged") {
  auto rng = testutil::make_rng(14);
  for (int i = 0; i < 200; ++i) {
    const Velocity3 v1 = testutil::random_velocity(rng);
    const Velocity3 v2 = testutil::random_velocity(rng);
    if (norm(cross(v1.vec(), v2.vec())) < 1e-3) continue;
    const RotationAxisAngle w12 = wigner_angle_two_boosts(v1, v2);
    const RotationAxisAngle w21 = wigner_angle_two_boosts(v2, v1);
    const Vec3 r12 = w12.angle * w12.axis;
    const Vec3 r21 = w21.angle * w21.axis;
    CHECK(norm(r12 + r21) < 1e-12);
    // The positive-angle axis lies along v1 x v2.
    CHECK(dot(w12.axis, normalized(cross(v1.vec(), v2.vec()))) ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("decomposition factors as rotation times boost") {
  auto rng = testutil::make_rng(15);
  for (int i = 0; i < 500; ++i) {
    const LorentzTransform t =
        compose(rotation_matrix(testutil::random_rotation(rng)),
                boost_from_velocity(testutil::random_velocity(rng)));
    const BoostRotation d = decompose_boost_rotation(t);
    const LorentzTransform rebuilt =
        compose(rotation_matrix(d.rotation), boost_from_velocity(d.velocity));
    CHECK(max_abs_diff(rebuilt.m, t.m) < 1e-10);
    CHECK(d.velocity.x == doctest::Approx(t.m.m[0][1] / t.m.m[0][0]).epsilon(1e-15));
  }
}

TEST_CASE("axis-angle extraction round trips across the angle range") {
  auto rng = testutil::make_rng(16);
  const double pi = 3.14159265358979323846;
  const double angles[] = {1e-8, 1e-5, 1e-3, 0.1,      1.0,
                           2.0,  3.0,  3.1,  pi - 1e-6, pi};
  for (const double angle : angles) {
    for (int i = 0; i < 20; ++i) {
      const RotationAxisAngle in{testutil::random_unit_vector(rng), angle};
      const LorentzTransform r = rotation_matrix(in);
      const RotationAxisAngle out = axis_angle_from_rotation(r.m.spatial_block());
      CHECK(out.angle == doctest::Approx(angle).epsilon(1e-9));
      // Compare as matrices; at pi the axis sign is genuinely ambiguous.
      CHECK(max_abs_diff(rotation_matrix(out).m, r.m) < 1e-12);
    }
  }
  const RotationAxisAngle none = axis_angle_from_rotation(Mat3::identity());
  CHECK(none.angle == 0.0);
  CHECK(none.axis.z == 1.0);
}

TEST_CASE("small-speed wigner angle follows the quadratic law") {
  const double beta = 1e-3;
  const RotationAxisAngle w = wigner_angle_two_boosts({beta, 0.0, 0.0}, {0.0, beta, 0.0});
  CHECK(w.angle == doctest::Approx(0.5 * beta * beta).epsilon(1e-5));
}

TEST_CASE("reprojection pulls drifted chains back onto the group") {
  auto rng = testutil::make_rng(17);
  LorentzTransform chain = LorentzTransform::identity();
  for (int i = 0; i < 400; ++i)
    chain = compose(chain, boost_from_velocity(testutil::random_velocity(rng, 0.1)));
  const LorentzTransform fixed = reproject_to_group(chain);
  CHECK(metric_residual(fixed) < 1e-13);
  CHECK(max_abs_diff(fixed.m, chain.m) < 1e-10);
}
