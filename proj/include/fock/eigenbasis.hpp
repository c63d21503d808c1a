#pragma once

// Momentum-space hydrogen eigenfunctions in the unit-radius convention.
// States are kept unnormalized so every coefficient stays Gaussian-rational:
// the solid harmonics follow the ladder convention Y_{l,l} = (p1+i p2)^l
// with lower m obtained by repeated L_- = L_x - i L_y (no normalization,
// no Condon-Shortley phase), and the radial polynomial is the terminating
// Gauss hypergeometric series in u = 1/(p^2+1).

#include <vector>

#include "fock/polyfield.hpp"

namespace fock {

// Homogeneous degree-l harmonic polynomial, ladder convention.
// Throws std::invalid_argument unless 0 <= |m| <= l.
Polynomial3 solid_harmonic(int l, int m);

// Coefficients of the terminating series F(-k, 2l+k+2, l+3/2, u) as exact
// rationals, index j = coefficient of u^j, j = 0..k.
struct HypergeomCoeffs {
  std::vector<mpq_class> coeffs;
};

HypergeomCoeffs hypergeom_poly(int k, int l);

// Sum_j c_j (1+p^2)^{k-j}: the radial polynomial of b_{nl} cleared of its
// denominator, with k = n-l-1.
Polynomial3 radial_numerator(int n, int l);

// b_{nlm} = Y_{lm}(p) (p^2+1)^{-l} P_k(1/(p^2+1)) in canonical ring form.
PolyField state_b(int n, int l, int m);

// a_{nlm} = b_{nlm} / (p^2+1)^2.
PolyField state_a(int n, int l, int m);

struct QuantumState {
  int n = 1, l = 0, m = 0, k = 0;
  PolyField b;
  PolyField a;
};

QuantumState make_state(int n, int l, int m);

// Substitution p -> n*p, recovering physical momenta from the unit-radius
// form; the image lives over (1 + n^2 p^2)^N.
RescaledField rescale_physical(const PolyField& f, int n);

}  // namespace fock
