#pragma once

#include <cmath>
#include <stdexcept>

#include "wigner/linalg.hpp"

namespace wigner {

/// A 3-velocity in natural units (c = 1). Valid states live strictly inside
/// the open unit ball.
struct Velocity3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 vec() const { return {x, y, z}; }

  double speed_squared() const { return x * x + y * y + z * z; }
  double speed() const { return std::sqrt(speed_squared()); }

  double gamma() const { return 1.0 / std::sqrt(1.0 - speed_squared()); }

  // gamma - 1 without the cancellation of 1/sqrt(1-b^2) - 1 at small speeds:
  // gamma - 1 = b^2 gamma^2 / (gamma + 1).
  double gamma_minus_one() const {
    const double g = gamma();
    return speed_squared() * g * g / (g + 1.0);
  }

  double rapidity() const { return std::atanh(speed()); }

  Velocity3 operator-() const { return {-x, -y, -z}; }
};

inline Velocity3 velocity_from(Vec3 v) { return {v.x, v.y, v.z}; }

inline void ensure_subluminal(const Velocity3& v) {
  if (!(v.speed_squared() < 1.0)) throw std::domain_error("superluminal velocity");
}

/// Relativistic velocity addition u (+) v: the velocity of an object moving
/// at v in a frame that itself moves at u. Matches the velocity read off
/// compose(boost(u), boost(v)) acting on the rest 4-velocity.
Velocity3 einstein_add(const Velocity3& u, const Velocity3& v);

}  // namespace wigner
