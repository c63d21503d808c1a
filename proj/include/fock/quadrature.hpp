#pragma once

// Fixed-rule radial quadrature: composite Gauss-Legendre panels with
// geometric grading toward integrable endpoint singularities and the
// r = a + t/(1-t) map for semi-infinite tails. One refinement pass
// (doubled order) is the convergence diagnostic; nothing here is adaptive.

#include <functional>
#include <string>
#include <vector>

namespace fock {

struct QuadratureSpec {
  int nodes = 64;  // Gauss-Legendre order per panel
  std::vector<double> domain_split;  // extra radial breakpoints, increasing
  std::string scheme = "gauss-legendre-composite";
  double precision_target = 1e-10;  // refinement-agreement threshold

  void validate() const;
  QuadratureSpec refined() const;  // same spec with doubled order
};

using Integrand = std::function<double(double)>;

// Single Gauss-Legendre panel of the given order.
double gauss_panel(const Integrand& f, double a, double b, int order);

// Composite rule over consecutive breakpoints.
double integrate_breakpoints(const Integrand& f,
                             const std::vector<double>& breakpoints,
                             int order);

// [a,b] with an integrable (e.g. logarithmic) singularity at one endpoint:
// panels graded geometrically toward it.
double integrate_graded(const Integrand& f, double a, double b, int order,
                        bool singular_at_right, int levels = 40);

// [a, infinity) through r = a + t/(1-t).
double integrate_tail(const Integrand& f, double a, int order,
                      int panels = 8);

}  // namespace fock
