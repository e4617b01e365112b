#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"
#include "wigner/spin.hpp"

using namespace wigner;

namespace {

SpinState random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  return make_spin_state({gauss(rng), gauss(rng)}, {gauss(rng), gauss(rng)});
}

}  // namespace

TEST_CASE("basis states point along the bloch axes") {
  const BlochVector up = bloch_vector(SpinState::spin_up());
  CHECK(up.x == 0.0);
  CHECK(up.y == 0.0);
  CHECK(up.z == 1.0);

  const BlochVector down = bloch_vector(SpinState::spin_down());
  CHECK(down.z == -1.0);

  const BlochVector x = bloch_vector(SpinState::bloch_x());
  CHECK(x.x == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(x.y) < 1e-15);
  CHECK(std::abs(x.z) < 1e-15);
}

TEST_CASE("make_spin_state normalizes and rejects the null state") {
  const SpinState s = make_spin_state({3.0, 0.0}, {0.0, 4.0});
  CHECK(s.norm_squared() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(norm(bloch_vector(s).vec()) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(make_spin_state(0.0, 0.0), std::domain_error);
}

TEST_CASE("bloch vectors rotate as SO(3)") {
  auto rng = testutil::make_rng(31);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const SpinState s = random_state(rng);
    const RotationAxisAngle r = testutil::random_rotation(rng);
    const SpinState rotated = apply_rotation(s, rotation_operator(r.angle, r.axis));
    const Vec3 direct = bloch_vector(rotated).vec();
    const Vec3 mapped = rotation_matrix(r).m.spatial_block() * bloch_vector(s).vec();
    worst = std::max(worst, norm(direct - mapped));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("global phase is unobservable") {
  const SpinState s = make_spin_state({0.6, 0.3}, {-0.2, 0.7});
  const Complex phase = std::polar(1.0, 1.234);
  const SpinState shifted{s.up * phase, s.down * phase};
  const Vec3 a = bloch_vector(s).vec();
  const Vec3 b = bloch_vector(shifted).vec();
  CHECK(norm(a - b) < 1e-15);
  CHECK(measured_rotation_angle(s, shifted) < 1e-7);
}

TEST_CASE("equatorial spin reads out the full rotation angle") {
  const SpinState initial = SpinState::bloch_x();
  for (const double theta : {0.001, 0.019738411995050049, 0.5, 1.5, 3.0}) {
    const SpinState final_state =
        apply_rotation(initial, rotation_operator(theta, {0.0, 0.0, 1.0}));
    CHECK(measured_rotation_angle(initial, final_state) ==
          doctest::Approx(theta).epsilon(1e-12));
  }
}

TEST_CASE("axis-parallel spin is unmoved") {
  const SpinState initial = SpinState::spin_up();
  const SpinState final_state =
      apply_rotation(initial, rotation_operator(1.0, {0.0, 0.0, 1.0}));
  CHECK(measured_rotation_angle(initial, final_state) < 1e-9);
  CHECK(norm(bloch_vector(final_state).vec() - bloch_vector(initial).vec()) < 1e-12);
}

TEST_CASE("rotations preserve the norm over many random pairs") {
  auto rng = testutil::make_rng(32);
  for (int i = 0; i < 1000; ++i) {
    const SpinState s = random_state(rng);
    const RotationAxisAngle r = testutil::random_rotation(rng);
    const SpinState rotated = apply_rotation(s, rotation_operator(r.angle, r.axis));
    CHECK(rotated.norm_squared() == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("non-unitary evolution is rejected") {
  const SpinorTransform boost = spinor_boost_from_velocity({0.5, 0.0, 0.0});
  CHECK_THROWS_AS(apply_rotation(SpinState::spin_up(), boost), std::domain_error);
}

TEST_CASE("shot-noise measurement converges and is deterministic") {
  const SpinState initial = SpinState::bloch_x();
  const SpinState final_state =
      apply_rotation(initial, rotation_operator(0.3, {0.0, 0.0, 1.0}));

  auto rng1 = testutil::make_rng(97);
  const CountedMeasurement m1 = measure_with_counts(initial, final_state, 1000000, rng1);
  CHECK(m1.total == 1000000);
  CHECK(m1.parallel > 0);
  CHECK(m1.parallel < m1.total);
  CHECK(std::abs(m1.estimated_angle - 0.3) < 5e-3);

  auto rng2 = testutil::make_rng(97);
  const CountedMeasurement m2 = measure_with_counts(initial, final_state, 1000000, rng2);
  CHECK(m1.parallel == m2.parallel);
  CHECK(m1.estimated_angle == m2.estimated_angle);

  auto rng3 = testutil::make_rng(97);
  CHECK_THROWS_AS(measure_with_counts(initial, final_state, 0, rng3), std::domain_error);
}

TEST_CASE("shot-noise extremes are exact") {
  auto rng = testutil::make_rng(33);
  const SpinState s = SpinState::bloch_x();
  const CountedMeasurement same = measure_with_counts(s, s, 1000, rng);
  CHECK(same.parallel == 1000);
  CHECK(same.estimated_angle == 0.0);

  const SpinState flipped =
      apply_rotation(s, rotation_operator(3.14159265358979323846, {0.0, 0.0, 1.0}));
  const CountedMeasurement anti = measure_with_counts(s, flipped, 1000, rng);
  CHECK(anti.parallel == 0);
  CHECK(anti.estimated_angle == doctest::Approx(3.14159265358979323846).epsilon(1e-12));
}
