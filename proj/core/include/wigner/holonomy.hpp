#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "wigner/lorentz.hpp"

namespace wigner {

/// Raised when a computation loses numerical validity (e.g. a transported
/// loop fails to close). Distinct from domain errors on inputs.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Radial density of the velocity-space area element,
/// dS = u / (1 - u^2)^(3/2) du dphi. Throws std::domain_error for u >= 1.
double velocity_area_element(double u);

/// Holonomy of one revolution around a velocity-space circle of radius
/// `speed`: 2 pi (gamma - 1), evaluated as 2 pi speed^2 gamma^2 / (gamma + 1)
/// so the small-speed regime keeps full precision.
double wigner_angle_circle(double speed);

/// Same angle as the area integral over the disk of radius `speed`. The
/// angular direction is analytic (factor 2 pi); the radial direction uses
/// composite Simpson on `quadrature_points` subintervals (made even, >= 8),
/// with the usual O(1/n^4) error bound.
double holonomy_area_integral(double speed, int quadrature_points);

/// A circular loop in velocity space traversed `turns` times, discretized
/// with `steps_per_turn` samples per revolution.
struct CircleLoop {
  double speed = 0.0;
  std::int64_t turns = 1;
  std::int64_t steps_per_turn = 0;
};

struct TransportOptions {
  double closure_tolerance = 1e-8;
  /// Re-project the accumulated transform onto the Lorentz group after this
  /// many compositions (0 disables).
  std::int64_t reproject_interval = 1024;
  /// Optional per-step observer: (step index, circle angle theta, signed
  /// rotation angle about +z accumulated so far). Step 0 reports the start.
  std::function<void(std::int64_t, double, double)> observer;
};

struct HolonomyResult {
  double analytic_angle = 0.0;   // turns * 2 pi (gamma - 1)
  double discrete_angle = 0.0;   // >= 0, unwrapped over turns
  Vec3 axis = {0.0, 0.0, 1.0};   // carries the rotation sense
  double residual_boost_speed = 0.0;
};

/// Discrete parallel transport of the rest frame around the loop; see the
/// scheme notes in holonomy.cpp. Converges to the analytic angle as
/// steps_per_turn grows (second order). Throws std::invalid_argument on bad
/// loop parameters and numerical_error when the loop fails to close.
HolonomyResult transport_loop(const CircleLoop& loop, const TransportOptions& options = {});

}  // namespace wigner
