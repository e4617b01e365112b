#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "wigner/spinor.hpp"

namespace wigner {

/// Normalized spin-1/2 state, amplitudes in the z basis.
struct SpinState {
  Complex up = 1.0;
  Complex down = 0.0;

  double norm_squared() const { return std::norm(up) + std::norm(down); }

  static SpinState spin_up() { return {1.0, 0.0}; }
  static SpinState spin_down() { return {0.0, 1.0}; }
  /// +x eigenstate: Bloch vector in the x direction.
  static SpinState bloch_x() { return {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}; }
};

/// Detector-facing direction of a spin state: (<sigma_x>, <sigma_y>, <sigma_z>).
/// Unit length for pure states.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 vec() const { return {x, y, z}; }
};

/// Normalizes the given amplitudes; throws std::domain_error on a null state.
SpinState make_spin_state(Complex up, Complex down);

/// Applies a unitary to the state. Throws std::domain_error when u fails
/// unitarity beyond 1e-10.
SpinState apply_rotation(const SpinState& state, const SpinorTransform& u);

BlochVector bloch_vector(const SpinState& state);

/// Angle in [0, pi] between the Bloch vectors of two states: the observable a
/// polarimeter reports. Global phase drops out by construction.
double measured_rotation_angle(const SpinState& initial, const SpinState& final_state);

/// One shot-noise detector run: counts that survive projection onto the
/// initial spin direction, p = cos^2(delta/2), sampled binomially.
struct CountedMeasurement {
  std::int64_t total = 0;
  std::int64_t parallel = 0;
  double estimated_angle = 0.0;  // radians, 2 acos(sqrt(parallel/total))
};

CountedMeasurement measure_with_counts(const SpinState& initial,
                                       const SpinState& final_state,
                                       std::int64_t counts, std::mt19937_64& rng);

}  // namespace wigner
