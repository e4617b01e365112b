#include "wigner/holonomy.hpp"

#include <cmath>

#include "wigner/velocity.hpp"

namespace wigner {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Vec4 four_velocity(const Velocity3& v) {
  const double g = v.gamma();
  return {{g, g * v.x, g * v.y, g * v.z}};
}

}  // namespace

double velocity_area_element(double u) {
  if (!(u >= 0.0 && u < 1.0)) throw std::domain_error("speed must lie in [0, 1)");
  const double r = 1.0 - u * u;
  return u / (r * std::sqrt(r));
}

double wigner_angle_circle(double speed) {
  if (!(speed >= 0.0 && speed < 1.0))
    throw std::domain_error("speed must lie in [0, 1)");
  const Velocity3 v{speed, 0.0, 0.0};
  return kTwoPi * v.gamma_minus_one();
}

double holonomy_area_integral(double speed, int quadrature_points) {
  if (!(speed >= 0.0 && speed < 1.0))
    throw std::domain_error("speed must lie in [0, 1)");
  if (quadrature_points < 8)
    throw std::invalid_argument("at least 8 quadrature points required");
  int n = quadrature_points + (quadrature_points % 2);
  const double h = speed / n;
  double sum = velocity_area_element(0.0) + velocity_area_element(speed);
  for (int i = 1; i < n; ++i)
    sum += (i % 2 == 1 ? 4.0 : 2.0) * velocity_area_element(i * h);
  return kTwoPi * sum * h / 3.0;
}

/*
  Discrete transport scheme.

  The loop samples velocities u_n = speed (cos theta_n, sin theta_n, 0),
  theta_n = 2 pi n / N. L is the rest-to-lab transform of the comoving
  frame, seeded with the pure boost onto u_0. Each step reads the next
  sample's 4-velocity in the current frame,

      Utilde = L^-1 (gamma_{n+1}, gamma_{n+1} u_{n+1}),

  and extends L by the pure boost that reaches it: L <- L B(w) with
  w = spatial(Utilde) / time(Utilde). A pure boost moves the frame along
  the velocity-space geodesic between consecutive samples, so the chain is
  parallel transport around the inscribed geodesic polygon; its holonomy
  approaches the circle's as N grows, with the polygon-vs-disk area deficit
  giving second-order convergence in 1/N.

  By construction L maps rest exactly onto the current sample's 4-velocity
  at every step (each composed boost retargets the next sample, so local
  errors do not feed forward into closure). After k N steps the defect
  D = B(u_0)^-1 L therefore fixes the rest vector up to roundoff: its boost
  part is the closure residual and its rotation part the accumulated Wigner
  rotation.

  Products of thousands of matrices drift off the group at the 1e-16/step
  level; every reproject_interval compositions L is factored and rebuilt
  with an exactly orthogonal rotation block, keeping 1e6-step chains within
  1e-10 of the group.

  The net rotation angle about +z is unwrapped by continuity across steps
  (per-step increments are tiny), so multi-turn totals beyond pi survive
  the folding of the axis-angle extraction.
*/
HolonomyResult transport_loop(const CircleLoop& loop, const TransportOptions& options) {
  if (!(loop.speed > 0.0 && loop.speed < 1.0))
    throw std::invalid_argument("loop speed must lie in (0, 1)");
  if (loop.turns < 1) throw std::invalid_argument("turns must be >= 1");
  if (loop.steps_per_turn < 3) throw std::invalid_argument("steps_per_turn must be >= 3");

  const std::int64_t n_per_turn = loop.steps_per_turn;
  const std::int64_t total_steps = loop.turns * n_per_turn;

  const auto sample = [&](std::int64_t n) -> Velocity3 {
    const double theta = kTwoPi * static_cast<double>(n % n_per_turn) /
                         static_cast<double>(n_per_turn);
    return {loop.speed * std::cos(theta), loop.speed * std::sin(theta), 0.0};
  };

  const LorentzTransform start = boost_from_velocity(sample(0));
  LorentzTransform lab = start;

  double accumulated = 0.0;  // signed angle about +z, unwrapped
  if (options.observer) options.observer(0, 0.0, 0.0);

  BoostRotation defect;
  for (std::int64_t n = 0; n < total_steps; ++n) {
    const Vec4 next = inverse(lab).m * four_velocity(sample(n + 1));
    const Velocity3 w = velocity_from(next.spatial() / next[0]);
    lab = compose(lab, boost_from_velocity(w));

    if (options.reproject_interval > 0 && (n + 1) % options.reproject_interval == 0)
      lab = reproject_to_group(lab);

    const LorentzTransform d =
        compose(boost_from_velocity(-sample(n + 1)), lab);
    defect = decompose_boost_rotation(d);
    // Sign about +z from the antisymmetric part, sin(angle) n_z: the
    // residual boost factor is symmetric and cannot flip it, and it stays
    // correct for angles far below the axis-zero threshold.
    const double folded =
        std::copysign(defect.rotation.angle, d.m.m[2][1] - d.m.m[1][2]);
    // Nearest 2 pi branch: per-step increments stay far below pi.
    accumulated = folded + kTwoPi * std::round((accumulated - folded) / kTwoPi);
    if (options.observer)
      options.observer(n + 1,
                       kTwoPi * static_cast<double>(n + 1) / static_cast<double>(n_per_turn),
                       accumulated);
  }

  HolonomyResult result;
  result.analytic_angle =
      static_cast<double>(loop.turns) * wigner_angle_circle(loop.speed);
  result.residual_boost_speed = defect.velocity.speed();
  result.discrete_angle = std::abs(accumulated);
  if (defect.rotation.angle > RotationAxisAngle::angle_zero_threshold &&
      result.discrete_angle < 3.1)
    result.axis = defect.rotation.axis;  // sub-pi: keep any numerical tilt
  else
    result.axis = accumulated < 0.0 ? Vec3{0.0, 0.0, -1.0} : Vec3{0.0, 0.0, 1.0};

  if (result.residual_boost_speed > options.closure_tolerance)
    throw numerical_error("loop did not close");

  return result;
}

}  // namespace wigner
