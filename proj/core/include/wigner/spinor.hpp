#pragma once

#include <complex>

#include "wigner/lorentz.hpp"
#include "wigner/velocity.hpp"

namespace wigner {

using Complex = std::complex<double>;

/// A 2x2 complex matrix with unit determinant: the spin-1/2 representation
/// of boosts (Hermitian positive-definite) and rotations (unitary).
struct SpinorTransform {
  Complex a, b;  // row 0
  Complex c, d;  // row 1

  static SpinorTransform identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex determinant() const { return a * d - b * c; }

  SpinorTransform adjoint() const {
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
  }
};

inline SpinorTransform compose(const SpinorTransform& p, const SpinorTransform& q) {
  return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d,
          p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
}

inline SpinorTransform operator-(const SpinorTransform& s) {
  return {-s.a, -s.b, -s.c, -s.d};
}

/// max-norm distance from unitarity, |s^dagger s - I|.
double unitarity_residual(const SpinorTransform& s);

/// Spinor image of the pure boost with velocity v: exp(rapidity * vhat.sigma / 2).
/// Hermitian positive-definite, det = 1.
SpinorTransform spinor_boost_from_velocity(const Velocity3& v);

/// Spin rotation operator by `angle` around unit vector `axis`:
/// cos(angle/2) I - i sin(angle/2) (axis . sigma). Throws std::domain_error
/// when the axis is not unit to 1e-9.
SpinorTransform rotation_operator(double angle, Vec3 axis);

/// The 4x4 image under the double cover, X' = s X s^dagger with
/// X = t I + x sigma_x + y sigma_y + z sigma_z. Maps s and -s to the same
/// transform. Throws std::domain_error when |det(s) - 1| > 1e-8.
LorentzTransform spinor_to_vector(const SpinorTransform& s);

}  // namespace wigner
