#include "fock/sphere.hpp"

#include <stdexcept>
#include <vector>

namespace fock {

double kernel_identity_residual(const std::array<double, 3>& p,
                                const std::array<double, 3>& p2) {
  double d2 = 0;
  for (int k = 0; k < 3; ++k) {
    double d = p[k] - p2[k];
    d2 += d * d;
  }
  if (d2 == 0.0) throw std::invalid_argument("kernel is singular at coincident points");

  SpherePoint s1 = stereographic_forward(p);
  SpherePoint s2 = stereographic_forward(p2);
  double chord2 = 0;
  for (int k = 0; k < 3; ++k) {
    double d = s1.xi[k] - s2.xi[k];
    chord2 += d * d;
  }
  double d0 = s1.xi0 - s2.xi0;
  chord2 += d0 * d0;

  double w1 = 1 + p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  double w2 = 1 + p2[0] * p2[0] + p2[1] * p2[1] + p2[2] * p2[2];
  double lhs = 1.0 / d2;
  double rhs = (2.0 / w1) * (1.0 / chord2) * (2.0 / w2);
  return std::abs(lhs - rhs) / lhs;
}

double sphere_weight(const std::array<double, 3>& p) {
  double w = 1 + p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  return 8.0 / (w * w * w);
}

PolyField pullback(const SpherePolynomial& f) {
  // substituted values: xi_i = 2p_i/(1+p^2), zeta = (p^2-1)/(1+p^2)
  std::array<PolyField, 4> sub;
  for (unsigned axis = 1; axis <= 3; ++axis)
    sub[axis - 1] =
        PolyField(GaussianRational(2) * Polynomial3::variable(axis), 1);
  sub[3] = PolyField(p_squared() - Polynomial3::one(), 1);

  // power tables up to the degree each variable actually reaches
  std::array<unsigned, 4> maxdeg{};
  for (const auto& [e, c] : f.terms())
    for (int k = 0; k < 4; ++k) maxdeg[k] = std::max(maxdeg[k], e[k]);
  std::array<std::vector<PolyField>, 4> pow;
  for (int k = 0; k < 4; ++k) {
    pow[k].resize(maxdeg[k] + 1);
    pow[k][0] = PolyField::one();
    for (unsigned j = 1; j <= maxdeg[k]; ++j) pow[k][j] = pow[k][j - 1] * sub[k];
  }

  PolyField acc;
  for (const auto& [e, c] : f.terms()) {
    PolyField term = PolyField::constant(c);
    for (int k = 0; k < 4; ++k) term = term * pow[k][e[k]];
    acc = acc + term;
  }
  return acc;
}

SpherePolynomial rotation_generator(unsigned axis, const SpherePolynomial& f) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("axis out of range");
  const unsigned zeta = 4;
  SpherePolynomial xi_df = SpherePolynomial::variable(axis) * f.derivative(zeta);
  SpherePolynomial zeta_df = SpherePolynomial::variable(zeta) * f.derivative(axis);
  return GaussianRational::i() * (xi_df - zeta_df);
}

double gegenbauer(const mpq_class& alpha, int k, double x) {
  if (k < 0) throw std::invalid_argument("polynomial degree must be >= 0");
  double a = alpha.get_d();
  if (k == 0) return 1.0;
  double c_prev = 1.0;
  double c = 2.0 * a * x;
  for (int j = 2; j <= k; ++j) {
    double c_next = (2.0 * x * (j + a - 1.0) * c - (j + 2.0 * a - 2.0) * c_prev) / j;
    c_prev = c;
    c = c_next;
  }
  return c;
}

}  // namespace fock
