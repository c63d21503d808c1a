#include <cmath>

#include "doctest.h"
#include "fock/physics_operators.hpp"
#include "fock/sphere.hpp"
#include "support.hpp"

using namespace fock;
using test::gr;
using test::var;

namespace {

PolyField pf(Polynomial3 num, unsigned n) { return {std::move(num), n}; }

SpherePolynomial svar(unsigned axis) { return SpherePolynomial::variable(axis); }

}  // namespace

TEST_CASE("stereographic forward: landmarks") {
  SpherePoint south = stereographic_forward<double>({0, 0, 0});
  CHECK(south.xi == std::array<double, 3>{0, 0, 0});
  CHECK(south.xi0 == -1.0);

  SpherePoint equator = stereographic_forward<double>({1, 0, 0});
  CHECK(equator.xi[0] == 1.0);
  CHECK(equator.xi0 == 0.0);

  SpherePoint far = stereographic_forward<double>({1e8, 0, 0});
  CHECK(far.xi0 > 1.0 - 1e-15);
}

TEST_CASE("stereographic forward: exact constraint on rational input") {
  test::Rng rng;
  for (int i = 0; i < 30; ++i) {
    std::array<mpq_class, 3> p{rng.rational(), rng.rational(), rng.rational()};
    SpherePointExact s = stereographic_forward(p);
    mpq_class c = s.xi[0] * s.xi[0] + s.xi[1] * s.xi[1] + s.xi[2] * s.xi[2] +
                  s.xi0 * s.xi0;
    CHECK(c == 1);
  }
}

TEST_CASE("stereographic inverse") {
  SpherePointExact south{{mpq_class(0), mpq_class(0), mpq_class(0)}, mpq_class(-1)};
  CHECK(stereographic_inverse(south) ==
        std::array<mpq_class, 3>{0, 0, 0});

  SpherePoint equator{{1, 0, 0}, 0};
  CHECK(stereographic_inverse(equator) == std::array<double, 3>{1, 0, 0});

  SpherePointExact s{{mpq_class(0), mpq_class(0), mpq_class(3, 5)}, mpq_class(4, 5)};
  std::array<mpq_class, 3> p = stereographic_inverse(s);
  CHECK(p == std::array<mpq_class, 3>{0, 0, 3});
  // forward-check the hand value
  CHECK(stereographic_forward(p).xi0 == mpq_class(4, 5));

  SpherePoint north{{0, 0, 0}, 1};
  CHECK_THROWS_AS(stereographic_inverse(north), std::domain_error);
}

TEST_CASE("round trip on random points") {
  test::Rng rng;
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    std::array<double, 3> p{rng.uniform(-5, 5), rng.uniform(-5, 5),
                            rng.uniform(-5, 5)};
    std::array<double, 3> q = stereographic_inverse(stereographic_forward(p));
    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(p[k] - q[k]));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("kernel identity") {
  CHECK(kernel_identity_residual({1, 0, 0}, {0, 0, 0}) == 0.0);
  CHECK(kernel_identity_residual({2, 0, 0}, {-2, 0, 0}) <= 1e-12);
  CHECK_THROWS_AS(kernel_identity_residual({1, 2, 3}, {1, 2, 3}),
                  std::invalid_argument);

  test::Rng rng;
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    std::array<double, 3> p{rng.uniform(-5, 5), rng.uniform(-5, 5),
                            rng.uniform(-5, 5)};
    std::array<double, 3> q{rng.uniform(-5, 5), rng.uniform(-5, 5),
                            rng.uniform(-5, 5)};
    double d2 = 0;
    for (int k = 0; k < 3; ++k) d2 += (p[k] - q[k]) * (p[k] - q[k]);
    if (d2 < 1e-12) continue;
    worst = std::max(worst, kernel_identity_residual(p, q));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("sphere weight") {
  CHECK(sphere_weight({0, 0, 0}) == 8.0);
  CHECK(sphere_weight({1, 0, 0}) == 1.0);
}

TEST_CASE("pullback") {
  CHECK(pullback(SpherePolynomial::one()) == PolyField::one());

  // zeta pulls back to (p^2-1)/(p^2+1)
  CHECK(pullback(svar(4)) == pf(p_squared() - Polynomial3::one(), 1));

  // xi1 pulls back to 2p1/(1+p^2)
  CHECK(pullback(svar(1)) == pf(gr(2) * var(1), 1));

  // the constraint polynomial collapses to 1 exactly
  SpherePolynomial constraint = svar(1) * svar(1) + svar(2) * svar(2) +
                                svar(3) * svar(3) + svar(4) * svar(4);
  CHECK(pullback(constraint) == PolyField::one());
}

TEST_CASE("rotation generators") {
  for (unsigned axis = 1; axis <= 3; ++axis) {
    CHECK(rotation_generator(axis, SpherePolynomial::one()).is_zero());
    // on zeta: i xi_axis
    CHECK(rotation_generator(axis, svar(4)) ==
          GaussianRational::i() * svar(axis));
  }
  // on xi1 about axis 1: -i zeta
  CHECK(rotation_generator(1, svar(1)) == (-GaussianRational::i()) * svar(4));
}

TEST_CASE("rotation correspondence on low-degree monomials") {
  OperatorTriple ab = runge_lenz_b_triple();
  for (unsigned d = 0; d <= 2; ++d)
    for (unsigned e1 = 0; e1 <= d; ++e1)
      for (unsigned e2 = 0; e1 + e2 <= d; ++e2)
        for (unsigned e3 = 0; e1 + e2 + e3 <= d; ++e3) {
          Exponents<4> e{e1, e2, e3, d - e1 - e2 - e3};
          SpherePolynomial f = SpherePolynomial::monomial(e, GaussianRational(1));
          for (unsigned axis = 1; axis <= 3; ++axis) {
            CHECK(pullback(rotation_generator(axis, f)) ==
                  ab[axis].apply(pullback(f)));
          }
        }
}

TEST_CASE("gegenbauer recurrence") {
  test::Rng rng;
  CHECK(gegenbauer(mpq_class(3, 2), 0, 0.7) == 1.0);
  CHECK(gegenbauer(mpq_class(1), 1, 0.5) == 1.0);  // 2*alpha*x
  for (int i = 0; i < 20; ++i) {
    double x = rng.uniform(-1, 1);
    CHECK(std::abs(gegenbauer(mpq_class(1), 2, x) - (4 * x * x - 1)) < 1e-14);
  }
  CHECK_THROWS_AS(gegenbauer(mpq_class(1), -1, 0.0), std::invalid_argument);
}
