#include "wigner/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace wigner {

SpinState make_spin_state(Complex up, Complex down) {
  const double n = std::sqrt(std::norm(up) + std::norm(down));
  if (!(n > 0.0)) throw std::domain_error("null spin state");
  return {up / n, down / n};
}

SpinState apply_rotation(const SpinState& state, const SpinorTransform& u) {
  if (unitarity_residual(u) > 1e-10)
    throw std::domain_error("spin evolution must be unitary");
  return {u.a * state.up + u.b * state.down, u.c * state.up + u.d * state.down};
}

BlochVector bloch_vector(const SpinState& state) {
  const Complex t = std::conj(state.up) * state.down;
  return {2.0 * t.real(), 2.0 * t.imag(),
          std::norm(state.up) - std::norm(state.down)};
}

double measured_rotation_angle(const SpinState& initial, const SpinState& final_state) {
  const Vec3 a = bloch_vector(initial).vec();
  const Vec3 b = bloch_vector(final_state).vec();
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

CountedMeasurement measure_with_counts(const SpinState& initial,
                                       const SpinState& final_state,
                                       std::int64_t counts, std::mt19937_64& rng) {
  if (counts <= 0) throw std::domain_error("count budget must be positive");
  const double delta = measured_rotation_angle(initial, final_state);
  const double p = std::cos(0.5 * delta) * std::cos(0.5 * delta);
  std::binomial_distribution<std::int64_t> dist(counts, p);
  CountedMeasurement out;
  out.total = counts;
  out.parallel = dist(rng);
  out.estimated_angle =
      2.0 * std::acos(std::sqrt(static_cast<double>(out.parallel) / counts));
  return out;
}

}  // namespace wigner
