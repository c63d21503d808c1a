#pragma once

// Verification suites driving every identity the engine is built to prove:
// exact eigenvalues, the SO(4) commutator algebra, the Casimir sum, the
// weight-conjugation between the a- and b-space Runge-Lenz forms, the
// sphere rotation correspondence, and the floating-point cross-checks.
// Exact suites count failing generators (residual 0 means proved on the
// whole test set); numeric suites carry their quadrature residuals.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fock/checks.hpp"

namespace fock {

struct VerifyOptions {
  int max_n = 6;          // eigenvalue sweep bound
  int degree = 4;         // spanning-set numerator degree bound
  int denom_power = 3;    // spanning-set denominator power bound
  int rotation_degree = 3;
  int overlap_max_n = 4;
  int quad_nodes = 64;
  std::uint64_t seed = 0x5eed5eedULL;  // random point pairs
  bool collect_records = false;
  // narrows the integral suite to a single (n, l) case when n > 0
  int integral_n = 0;
  int integral_l = 0;
  std::map<std::string, double> tolerances;

  double tol(const std::string& name, double fallback) const {
    auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
  }

  QuadratureSpec quadrature() const {
    QuadratureSpec s;
    s.nodes = quad_nodes;
    return s;
  }
};

const std::vector<std::string>& suite_names();  // excludes "all"

// Runs one suite ("eigen", "commutators", "casimir", "conjugation",
// "rotation", "kernel", "integral", "fourier", "gegenbauer", "overlap" or
// "all"). Throws std::invalid_argument for unknown names.
std::vector<CheckReport> run_suite(const std::string& suite,
                                   const VerifyOptions& opt);

// The spanning test set: p^e/(1+p^2)^N for |e| <= degree, N <= denom_power.
std::vector<PolyField> spanning_set(int degree, int denom_power);

}  // namespace fock
