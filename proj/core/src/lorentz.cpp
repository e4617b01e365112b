#include "wigner/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wigner {

namespace {

Mat4 minkowski_eta() {
  Mat4 eta;
  eta.m[0][0] = 1.0;
  eta.m[1][1] = eta.m[2][2] = eta.m[3][3] = -1.0;
  return eta;
}

const Mat4 kEta = minkowski_eta();

}  // namespace

Velocity3 einstein_add(const Velocity3& u, const Velocity3& v) {
  ensure_subluminal(u);
  ensure_subluminal(v);
  const double g = u.gamma();
  const double uv = dot(u.vec(), v.vec());
  const Vec3 num = u.vec() + (1.0 / g) * v.vec() + (g / (1.0 + g)) * uv * u.vec();
  return velocity_from(num / (1.0 + uv));
}

LorentzTransform boost_from_velocity(const Velocity3& v) {
  ensure_subluminal(v);
  const double s2 = v.speed_squared();
  Mat4 b = Mat4::identity();
  if (s2 == 0.0) return {b};
  const double g = v.gamma();
  const Vec3 w = v.vec();
  b.m[0][0] = g;
  for (int i = 0; i < 3; ++i) {
    b.m[0][i + 1] = b.m[i + 1][0] = g * w[i];
    for (int j = 0; j < 3; ++j)
      b.m[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + (g - 1.0) * w[i] * w[j] / s2;
  }
  return {b};
}

LorentzTransform compose(const LorentzTransform& a, const LorentzTransform& b) {
  return {a.m * b.m};
}

LorentzTransform inverse(const LorentzTransform& t) {
  // eta m^T eta, written out: transpose with sign flips on the mixed
  // time/space entries. Exact (no arithmetic), group inverse for members.
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r.m[i][j] = ((i == 0) != (j == 0)) ? -t.m.m[j][i] : t.m.m[j][i];
  return {r};
}

LorentzTransform rotation_matrix(const RotationAxisAngle& r) {
  const double c = std::cos(r.angle);
  const double s = std::sin(r.angle);
  const Vec3 n = r.axis;
  Mat4 out = Mat4::identity();
  // Rodrigues: R = c I + s [n]_x + (1-c) n n^T
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.m[i + 1][j + 1] = (i == j ? c : 0.0) + (1.0 - c) * n[i] * n[j];
  out.m[1][2] -= s * n.z;
  out.m[2][1] += s * n.z;
  out.m[1][3] += s * n.y;
  out.m[3][1] -= s * n.y;
  out.m[2][3] -= s * n.x;
  out.m[3][2] += s * n.x;
  return {out};
}

double metric_residual(const LorentzTransform& t) {
  return max_abs_diff(t.m.transposed() * kEta * t.m, kEta);
}

bool is_proper_orthochronous(const LorentzTransform& t, double tol) {
  if (metric_residual(t) > tol) return false;
  if (t.m.m[0][0] < 1.0 - tol) return false;
  // Metric preservation pins |det| = 1; the rotation block's sign decides
  // proper vs improper once orthochronicity holds.
  const Velocity3 v{t.m.m[0][1] / t.m.m[0][0], t.m.m[0][2] / t.m.m[0][0],
                    t.m.m[0][3] / t.m.m[0][0]};
  if (!(v.speed_squared() < 1.0)) return false;
  const Mat4 w = (t.m * inverse(boost_from_velocity(v)).m);
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = w.m[i + 1][j + 1];
  return det(r) > 0.0;
}

Velocity3 rest_frame_velocity(const LorentzTransform& t) {
  return {t.m.m[1][0] / t.m.m[0][0], t.m.m[2][0] / t.m.m[0][0],
          t.m.m[3][0] / t.m.m[0][0]};
}

RotationAxisAngle axis_angle_from_rotation(const Mat3& r) {
  // Shepperd-style quaternion extraction: pivot on the largest of
  // {trace, diagonal entries} so every branch divides by an O(1) quantity.
  const double tr = r.trace();
  double w, x, y, z;
  if (tr >= r.m[0][0] && tr >= r.m[1][1] && tr >= r.m[2][2]) {
    const double s = 2.0 * std::sqrt(tr + 1.0);
    w = 0.25 * s;
    x = (r.m[2][1] - r.m[1][2]) / s;
    y = (r.m[0][2] - r.m[2][0]) / s;
    z = (r.m[1][0] - r.m[0][1]) / s;
  } else if (r.m[0][0] >= r.m[1][1] && r.m[0][0] >= r.m[2][2]) {
    const double s = 2.0 * std::sqrt(1.0 + r.m[0][0] - r.m[1][1] - r.m[2][2]);
    w = (r.m[2][1] - r.m[1][2]) / s;
    x = 0.25 * s;
    y = (r.m[0][1] + r.m[1][0]) / s;
    z = (r.m[0][2] + r.m[2][0]) / s;
  } else if (r.m[1][1] >= r.m[2][2]) {
    const double s = 2.0 * std::sqrt(1.0 + r.m[1][1] - r.m[0][0] - r.m[2][2]);
    w = (r.m[0][2] - r.m[2][0]) / s;
    x = (r.m[0][1] + r.m[1][0]) / s;
    y = 0.25 * s;
    z = (r.m[1][2] + r.m[2][1]) / s;
  } else {
    const double s = 2.0 * std::sqrt(1.0 + r.m[2][2] - r.m[0][0] - r.m[1][1]);
    w = (r.m[1][0] - r.m[0][1]) / s;
    x = (r.m[0][2] + r.m[2][0]) / s;
    y = (r.m[1][2] + r.m[2][1]) / s;
    z = 0.25 * s;
  }
  if (w < 0.0) {
    w = -w;
    x = -x;
    y = -y;
    z = -z;
  }
  const Vec3 v{x, y, z};
  const double vn = norm(v);

  RotationAxisAngle out;
  out.angle = 2.0 * std::atan2(vn, w);
  out.axis =
      out.angle < RotationAxisAngle::angle_zero_threshold ? Vec3{0.0, 0.0, 1.0} : v / vn;
  return out;
}

BoostRotation decompose_boost_rotation(const LorentzTransform& t) {
  if (t.m.m[0][0] < 1.0 - 1e-8)
    throw std::invalid_argument("input is not a Lorentz transform");

  const Velocity3 v3{t.m.m[0][1] / t.m.m[0][0], t.m.m[0][2] / t.m.m[0][0],
                     t.m.m[0][3] / t.m.m[0][0]};
  if (!(v3.speed_squared() < 1.0))
    throw std::invalid_argument("input is not a Lorentz transform");

  const Mat4 w = (t.m * inverse(boost_from_velocity(v3)).m);
  const Mat3 r = [&] {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out.m[i][j] = w.m[i + 1][j + 1];
    return out;
  }();

  // The residual factor must be a pure spatial rotation: unit time-time
  // entry, vanishing time row/column, orthogonal spatial block, det +1.
  double time_defect = std::abs(w.m[0][0] - 1.0);
  for (int i = 1; i < 4; ++i)
    time_defect = std::max({time_defect, std::abs(w.m[0][i]), std::abs(w.m[i][0])});
  if (time_defect > 1e-8 ||
      max_abs_diff(r * r.transposed(), Mat3::identity()) > 1e-8 || det(r) < 0.0)
    throw std::invalid_argument("input is not a Lorentz transform");

  return {v3, axis_angle_from_rotation(r)};
}

RotationAxisAngle wigner_angle_two_boosts(const Velocity3& v1, const Velocity3& v2) {
  const LorentzTransform t =
      compose(boost_from_velocity(v2), boost_from_velocity(v1));
  return decompose_boost_rotation(t).rotation;
}

LorentzTransform reproject_to_group(const LorentzTransform& t) {
  const Velocity3 v{t.m.m[0][1] / t.m.m[0][0], t.m.m[0][2] / t.m.m[0][0],
                    t.m.m[0][3] / t.m.m[0][0]};
  const Mat4 w = (t.m * inverse(boost_from_velocity(v)).m);

  // Gram-Schmidt on the rotation block's rows; the block is already within
  // roundoff of orthogonal, so this is the nearest-rotation map in practice.
  Vec3 r0{w.m[1][1], w.m[1][2], w.m[1][3]};
  Vec3 r1{w.m[2][1], w.m[2][2], w.m[2][3]};
  r0 = normalized(r0);
  r1 = normalized(r1 - dot(r1, r0) * r0);
  const Vec3 r2 = cross(r0, r1);

  Mat4 wfixed = Mat4::identity();
  const Vec3 rows[3] = {r0, r1, r2};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) wfixed.m[i + 1][j + 1] = rows[i][j];

  return {wfixed * boost_from_velocity(v).m};
}

}  // namespace wigner
