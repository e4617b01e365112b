#include "wigner/spinor.hpp"

#include <cmath>
#include <stdexcept>

namespace wigner {

namespace {

// sigma_0..sigma_3
const SpinorTransform kSigma[4] = {
    {1.0, 0.0, 0.0, 1.0},
    {0.0, 1.0, 1.0, 0.0},
    {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0},
    {1.0, 0.0, 0.0, -1.0},
};

double real_half_trace(const SpinorTransform& s) { return 0.5 * (s.a + s.d).real(); }

}  // namespace

double unitarity_residual(const SpinorTransform& s) {
  const SpinorTransform p = compose(s.adjoint(), s);
  double r = std::abs(p.a - 1.0);
  r = std::max(r, std::abs(p.b));
  r = std::max(r, std::abs(p.c));
  return std::max(r, std::abs(p.d - 1.0));
}

SpinorTransform spinor_boost_from_velocity(const Velocity3& v) {
  ensure_subluminal(v);
  const double s = v.speed();
  if (s == 0.0) return SpinorTransform::identity();
  const double g = v.gamma();
  // cosh(rho/2) = sqrt((g+1)/2); sinh(rho/2) = s g / sqrt(2 (g+1)), which
  // avoids the sqrt(g-1) cancellation at small speeds.
  const double ch = std::sqrt((g + 1.0) / 2.0);
  const double sh = s * g / std::sqrt(2.0 * (g + 1.0));
  const Vec3 n = v.vec() / s;
  return {Complex(ch + sh * n.z, 0.0), Complex(sh * n.x, -sh * n.y),
          Complex(sh * n.x, sh * n.y), Complex(ch - sh * n.z, 0.0)};
}

SpinorTransform rotation_operator(double angle, Vec3 axis) {
  if (std::abs(norm(axis) - 1.0) > 1e-9)
    throw std::domain_error("rotation axis must be a unit vector");
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  return {Complex(c, -s * axis.z), Complex(-s * axis.y, -s * axis.x),
          Complex(s * axis.y, -s * axis.x), Complex(c, s * axis.z)};
}

LorentzTransform spinor_to_vector(const SpinorTransform& s) {
  if (std::abs(s.determinant() - 1.0) > 1e-8)
    throw std::domain_error("spinor transform must have unit determinant");
  const SpinorTransform sd = s.adjoint();
  Mat4 out;
  for (int nu = 0; nu < 4; ++nu) {
    const SpinorTransform col = compose(compose(s, kSigma[nu]), sd);
    for (int mu = 0; mu < 4; ++mu)
      out.m[mu][nu] = real_half_trace(compose(kSigma[mu], col));
  }
  return {out};
}

}  // namespace wigner
