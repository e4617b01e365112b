#pragma once

#include "wigner/linalg.hpp"
#include "wigner/velocity.hpp"

namespace wigner {

// Conventions used throughout: metric signature (+,-,-,-), coordinate order
// (t, x, y, z), column-vector action X' = L X. Only proper orthochronous
// transforms (det = +1, m[0][0] >= 1) are constructed or accepted.

/// A 4x4 real matrix preserving the Minkowski metric.
struct LorentzTransform {
  Mat4 m;

  static LorentzTransform identity() { return {Mat4::identity()}; }
};

/// Axis-angle description of a spatial rotation. Extraction routines report
/// the angle in [0, pi] with the axis carrying the orientation; below
/// `angle_zero_threshold` the axis is +z by convention (the axis of a zero
/// rotation is undefined).
struct RotationAxisAngle {
  Vec3 axis = {0.0, 0.0, 1.0};
  double angle = 0.0;

  static constexpr double angle_zero_threshold = 1e-9;
};

/// Result of factoring a transform as rotation * boost.
struct BoostRotation {
  Velocity3 velocity;
  RotationAxisAngle rotation;
};

/// Standard rotation-free boost with velocity v. Symmetric; maps the rest
/// 4-velocity (1,0,0,0) to (gamma, gamma v). Throws std::domain_error for
/// speed >= 1.
LorentzTransform boost_from_velocity(const Velocity3& v);

/// Matrix product a * b.
LorentzTransform compose(const LorentzTransform& a, const LorentzTransform& b);

/// Group inverse, eta * m^T * eta. Exact for members of the group.
LorentzTransform inverse(const LorentzTransform& t);

/// Spatial rotation embedded in a 4x4 transform (time row/column untouched).
LorentzTransform rotation_matrix(const RotationAxisAngle& r);

/// max |m^T eta m - eta|: distance from the Lorentz group.
double metric_residual(const LorentzTransform& t);

bool is_proper_orthochronous(const LorentzTransform& t, double tol = 1e-9);

/// Velocity of the transformed rest frame, read off the image of (1,0,0,0).
Velocity3 rest_frame_velocity(const LorentzTransform& t);

/// Axis-angle of a 3x3 rotation matrix. Angle in [0, pi]; the axis carries
/// the orientation. Stable near 0 (atan2 of the antisymmetric part) and near
/// pi (symmetric-part fallback).
RotationAxisAngle axis_angle_from_rotation(const Mat3& r);

/// Factors a proper orthochronous t as rotation * boost:
///   t = rotation_matrix(W) * boost_from_velocity(v3).
/// v3 is read off the first row, v3_i = t[0][i]/t[0][0]; the equivalent
/// boost-first factoring t = boost * rotation' shares the same rotation and
/// is not exposed. Throws std::invalid_argument when the rotation block
/// fails orthogonality beyond 1e-8 or t is not proper orthochronous.
BoostRotation decompose_boost_rotation(const LorentzTransform& t);

/// Wigner rotation of compose(boost(v2), boost(v1)). Angle is reported
/// positive with the axis carrying the sense; for non-collinear pairs the
/// axis is aligned with v1 x v2 (antiparallel to the v2 x v1 reference, so
/// the signed angle about v2 x v1 is negative). Collinear pairs give angle 0.
RotationAxisAngle wigner_angle_two_boosts(const Velocity3& v1, const Velocity3& v2);

/// Nearest-group re-projection for long composition chains: factor, restore
/// exact orthogonality of the rotation block, rebuild.
LorentzTransform reproject_to_group(const LorentzTransform& t);

}  // namespace wigner
