#pragma once

// Floating-point cross-checks of the symbolic layer: the nonlocal integral
// form of the momentum-space eigenproblem, Fourier consistency of the
// circular states, the sphere measure, and state overlaps under it. Every
// check reports a residual against a tolerance plus a negative control or
// refinement diagnostic so a vacuous pass cannot slip through.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "fock/eigenbasis.hpp"
#include "fock/quadrature.hpp"

namespace fock {

// One exact-identity evaluation on one test element.
struct IdentityRecord {
  std::string identity;
  std::string test_element;
  bool residual_is_zero = false;
};

struct CheckReport {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<IdentityRecord> records;

  static CheckReport make(std::string name, double residual, double tolerance);
  void add_meta(const std::string& key, const std::string& value);
  void add_meta(const std::string& key, double value);
};

std::string format_double(double v);

// Max over a radial sample grid of |(p^2+1)a(p) - (n/pi^2) K[a](p)| relative
// to |(p^2+1)a(p)| for the unit-radius state a_{nl}, with the kernel reduced
// to one dimension through the closed-form angular integral (Legendre Q_l).
CheckReport integral_equation_residual(int n, int l, const QuadratureSpec& spec,
                                       double tolerance = 1e-6);

// Same machinery on a deliberately perturbed n=1 profile a(p)(1+0.1p^2);
// passes when the measured residual is at least `required_minimum`.
CheckReport integral_equation_negative_control(const QuadratureSpec& spec,
                                               double required_minimum = 1e-2);

// Radial spherical Bessel transform of r^{n-1} e^{-r} against the symbolic
// momentum profile p^{n-1}/(1+p^2)^{n+1}: ratio spread over 20 momenta.
CheckReport fourier_radial_check(int n, const QuadratureSpec& spec,
                                 double tolerance = 1e-8);

// n=1 transform against the wrong power 1/(1+p^2)^3.
CheckReport fourier_negative_control(const QuadratureSpec& spec,
                                     double required_minimum = 1e-1);

// Integral of 8/(1+p^2)^3 over momentum space against 2 pi^2.
CheckReport sphere_area_check(const QuadratureSpec& spec,
                              double tolerance = 1e-8);

// Same integral with weight 8/(1+p^2)^power; exercises the convergence
// diagnostics (power 3 is the real measure, power <= 1 has no finite value).
CheckReport sphere_area_check_with_power(int power, const QuadratureSpec& spec,
                                         double tolerance = 1e-8);

// <b1|b2> under the Fock measure 8/(1+p^2)^3 d^3p. The angular factor is
// exact (solid-harmonic monomial integrals over the unit sphere); the radial
// factor is numeric. Exactly zero whenever the angular factor vanishes.
std::complex<double> state_overlap(const QuantumState& s1,
                                   const QuantumState& s2,
                                   const QuadratureSpec& spec);

// Off-diagonal overlap magnitudes for all states with n <= max_n, relative
// to the corresponding diagonal entries.
CheckReport overlap_matrix_check(int max_n, const QuadratureSpec& spec,
                                 double tolerance = 1e-8);

// int |Y_lm|^2 dOmega / (4 pi) for the ladder-convention solid harmonics,
// exact.
mpq_class solid_harmonic_mean_square(int l, int m);

// Angular average of |a_phys|^2 at radial momentum p for the physically
// rescaled state (p -> n p).
double momentum_density(const QuantumState& s, double p);

}  // namespace fock
