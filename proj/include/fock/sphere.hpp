#pragma once

// Stereographic projection between the momentum 3-plane and the unit
// 3-sphere, the kernel and measure identities that come with it, pullback
// of sphere polynomials into the momentum ring, the sphere rotation
// generators mixing xi and zeta, and the Gegenbauer recurrence used as an
// independent oracle for the radial polynomials.

#include <array>

#include "fock/polyfield.hpp"

namespace fock {

template <typename T>
struct SpherePointT {
  std::array<T, 3> xi{};
  T xi0{};
};

using SpherePoint = SpherePointT<double>;
using SpherePointExact = SpherePointT<mpq_class>;

// xi = 2p/(1+p^2), xi0 = (p^2-1)/(p^2+1). Exact on rational input.
template <typename T>
SpherePointT<T> stereographic_forward(const std::array<T, 3>& p) {
  T p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  T w = p2 + T(1);
  SpherePointT<T> s;
  for (int k = 0; k < 3; ++k) s.xi[k] = T(2) * p[k] / w;
  s.xi0 = (p2 - T(1)) / w;
  return s;
}

// p = xi/(1 - xi0); the north pole xi0 = 1 has no preimage.
template <typename T>
std::array<T, 3> stereographic_inverse(const SpherePointT<T>& s) {
  if (s.xi0 == T(1))
    throw std::domain_error("north pole has no stereographic preimage");
  T d = T(1) - s.xi0;
  return {s.xi[0] / d, s.xi[1] / d, s.xi[2] / d};
}

// Relative residual of the kernel factorization
//   1/|p-p'|^2 = [2/(p^2+1)] * 1/((xi-xi')^2 + (xi0-xi0')^2) * [2/(p'^2+1)].
// Throws std::invalid_argument for coincident points.
double kernel_identity_residual(const std::array<double, 3>& p,
                                const std::array<double, 3>& p2);

// dS3/d^3p = 8/(1+p^2)^3.
double sphere_weight(const std::array<double, 3>& p);

// Polynomials on the embedding space, variables (xi1, xi2, xi3, zeta).
using SpherePolynomial = Polynomial4;

// Substitutes xi_i -> 2 p_i/(p^2+1), zeta -> (p^2-1)/(p^2+1); exact.
PolyField pullback(const SpherePolynomial& f);

// i (xi_axis d/dzeta - zeta d/dxi_axis) f, one generator per axis.
SpherePolynomial rotation_generator(unsigned axis, const SpherePolynomial& f);

// C^alpha_k(x) by the three-term recurrence
//   C_0 = 1, C_1 = 2 alpha x, k C_k = 2x(k+alpha-1)C_{k-1} - (k+2alpha-2)C_{k-2}.
double gegenbauer(const mpq_class& alpha, int k, double x);

}  // namespace fock
