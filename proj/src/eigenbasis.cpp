#include "fock/eigenbasis.hpp"

#include <stdexcept>

#include "fock/physics_operators.hpp"

namespace fock {

namespace {

void check_lm(int l, int m) {
  if (l < 0 || m < -l || m > l)
    throw std::invalid_argument("invalid (l, m) quantum numbers");
}

void check_nlm(int n, int l, int m) {
  if (n < 1) throw std::invalid_argument("principal quantum number n must be >= 1");
  if (l < 0 || l >= n) throw std::invalid_argument("orbital number must satisfy 0 <= l < n");
  if (m < -l || m > l) throw std::invalid_argument("magnetic number must satisfy |m| <= l");
}

}  // namespace

Polynomial3 solid_harmonic(int l, int m) {
  check_lm(l, m);
  // top state (p1 + i p2)^l
  Polynomial3 top = Polynomial3::one();
  Polynomial3 p_plus = Polynomial3::variable(1) +
                       GaussianRational::i() * Polynomial3::variable(2);
  for (int j = 0; j < l; ++j) top *= p_plus;

  LinearOperator lower =
      angular_momentum(1) + scale(-GaussianRational::i(), angular_momentum(2));
  PolyField y(top, 0);
  for (int j = 0; j < l - m; ++j) y = lower.apply(y);
  // lowering keeps polynomials polynomial
  if (y.denom_power() != 0)
    throw std::logic_error("solid harmonic left the polynomial ring");
  return y.numerator();
}

HypergeomCoeffs hypergeom_poly(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("k and l must be >= 0");
  mpq_class alpha(-k), beta(2 * l + k + 2), gamma(2 * l + 3, 2);
  HypergeomCoeffs h;
  h.coeffs.reserve(k + 1);
  mpq_class c(1);
  h.coeffs.push_back(c);
  for (int j = 1; j <= k; ++j) {
    c *= (alpha + (j - 1)) * (beta + (j - 1));
    c /= (gamma + (j - 1)) * j;
    h.coeffs.push_back(c);
  }
  return h;
}

Polynomial3 radial_numerator(int n, int l) {
  int k = n - l - 1;
  HypergeomCoeffs h = hypergeom_poly(k, l);
  Polynomial3 acc;
  for (int j = 0; j <= k; ++j)
    acc += GaussianRational(h.coeffs[j]) * weight_poly(k - j);
  return acc;
}

PolyField state_b(int n, int l, int m) {
  check_nlm(n, l, m);
  int k = n - l - 1;
  Polynomial3 num = solid_harmonic(l, m) * radial_numerator(n, l);
  return PolyField(std::move(num), static_cast<unsigned>(l + k));
}

PolyField state_a(int n, int l, int m) {
  PolyField b = state_b(n, l, m);
  return PolyField(b.numerator(), b.denom_power() + 2);
}

QuantumState make_state(int n, int l, int m) {
  check_nlm(n, l, m);
  QuantumState s;
  s.n = n;
  s.l = l;
  s.m = m;
  s.k = n - l - 1;
  s.b = state_b(n, l, m);
  s.a = state_a(n, l, m);
  return s;
}

RescaledField rescale_physical(const PolyField& f, int n) {
  if (n < 1) throw std::invalid_argument("scale must be >= 1");
  return RescaledField::from_unit(f, mpq_class(n));
}

}  // namespace fock
