#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wigner/holonomy.hpp"
#include "wigner/spin.hpp"

namespace wigner {

inline constexpr double speed_of_light_si = 299792458.0;  // m/s, exact

inline constexpr double degrees_per_radian = 57.295779513082320876798154814105;

/// Detector statistics: total count budget before decay losses, plus the
/// generator seed.
struct ShotNoiseConfig {
  std::int64_t counts = 0;
  std::uint64_t seed = 0;
};

/// Ring-experiment parameters in SI units. The orbit lies in the xy-plane,
/// so the accumulated rotation acts about the lab z axis; the default
/// initial spin points along Bloch x (in the orbit plane), where the full
/// rotation angle is observable.
struct ExperimentConfig {
  double speed_si = 0.0;     // m/s
  double radius_si = 0.0;    // m
  double duration_si = 0.0;  // s
  double lifetime_si = 887.0;
  SpinState initial_spin = SpinState::bloch_x();
  std::optional<ShotNoiseConfig> shot_noise;
};

struct ExperimentResult {
  double revolutions = 0.0;           // may be fractional
  double angle_per_revolution = 0.0;  // rad
  double total_angle_rad = 0.0;       // revolutions * angle_per_revolution
  double total_angle_deg = 0.0;
  double survival_fraction = 0.0;  // exp(-duration/lifetime)
  SpinState final_spin;
  /// Noiseless observable: Bloch angle between initial and final spin, deg.
  double measured_angle_deg = 0.0;
  /// Present in shot-noise mode; counts are attenuated by the survival
  /// fraction, the angle never is.
  std::optional<CountedMeasurement> counted;
};

/// exp(-duration/lifetime); throws std::domain_error on non-positive inputs.
double survival_fraction(double duration_si, double lifetime_si);

/// Total accumulated rotation for one configuration: revolutions times the
/// per-revolution circle holonomy at beta = speed/c, applied to the initial
/// spin about z.
ExperimentResult total_wigner_rotation(const ExperimentConfig& cfg);

struct SweepCell {
  double radius_si = 0.0;
  double duration_si = 0.0;
  ExperimentResult result;
};

/// Full grid over radii and durations; rows ordered with durations as the
/// outer loop and radii inner. Throws std::invalid_argument on empty lists.
std::vector<SweepCell> sweep_radius(const ExperimentConfig& base,
                                    const std::vector<double>& radii_si,
                                    const std::vector<double>& durations_si);

}  // namespace wigner
