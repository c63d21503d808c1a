#include <complex>

#include "doctest.h"
#include "fock/polyfield.hpp"
#include "support.hpp"

using namespace fock;
using test::gr;
using test::var;

namespace {

PolyField pf(Polynomial3 num, unsigned n) { return {std::move(num), n}; }

}  // namespace

TEST_CASE("canonicalization") {
  // exact cancellation
  CHECK(pf(one_plus_p2(), 1) == PolyField::one());
  // zero numerator collapses the denominator
  PolyField z = pf(Polynomial3::zero(), 5);
  CHECK(z.is_zero());
  CHECK(z.denom_power() == 0);
  // non-divisible numerator is left alone
  Polynomial3 n = one_plus_p2() * (var(1) * var(1) - Polynomial3::one()) + var(3);
  CHECK(!n.divide_exact(one_plus_p2()).has_value());  // division oracle
  PolyField f = pf(n, 3);
  CHECK(f.denom_power() == 3);
  CHECK(f.numerator() == n);
  // double cancellation
  CHECK(pf(one_plus_p2() * one_plus_p2(), 3) == pf(Polynomial3::one(), 1));
}

TEST_CASE("partial derivatives") {
  CHECK(PolyField::one().partial_derivative(1).is_zero());
  // d/dp1 of 1/(1+p^2) = -2 p1/(1+p^2)^2, by hand
  PolyField f = pf(Polynomial3::one(), 1);
  CHECK(f.partial_derivative(1) == pf(gr(-2) * var(1), 2));
  // monomial rule
  CHECK(pf(var(3) * var(3), 0).partial_derivative(3) == pf(gr(2) * var(3), 0));
}

TEST_CASE("laplacian") {
  CHECK(pf(p_squared(), 0).laplacian() == PolyField::constant(gr(6)));
  CHECK(pf(var(1) * var(2), 0).laplacian().is_zero());
  // second derivatives composed one axis at a time are the oracle
  PolyField f = pf(Polynomial3::one(), 1);
  PolyField composed;
  for (unsigned axis = 1; axis <= 3; ++axis)
    composed = composed + f.partial_derivative(axis).partial_derivative(axis);
  CHECK(f.laplacian() == composed);
  // and the closed form: (2p^2 - 6)/(1+p^2)^3
  CHECK(f.laplacian() ==
        pf(gr(2) * p_squared() - Polynomial3::constant(gr(6)), 3));
  test::Rng rng;
  for (int i = 0; i < 10; ++i) {
    PolyField g = rng.field();
    PolyField c2;
    for (unsigned axis = 1; axis <= 3; ++axis)
      c2 = c2 + g.partial_derivative(axis).partial_derivative(axis);
    CHECK(g.laplacian() == c2);
  }
}

TEST_CASE("euler degree operator") {
  CHECK(pf(var(1) * var(2), 0).euler_degree() == pf(gr(2) * var(1) * var(2), 0));
  CHECK(PolyField::one().euler_degree().is_zero());
  // (p.grad) 1/(1+p^2) = -2p^2/(1+p^2)^2, by hand
  CHECK(pf(Polynomial3::one(), 1).euler_degree() == pf(gr(-2) * p_squared(), 2));
}

TEST_CASE("Euler theorem on homogeneous polynomials") {
  test::Rng rng;
  for (unsigned d = 0; d <= 8; ++d) {
    // build a random homogeneous polynomial of degree exactly d
    Polynomial3 h;
    for (int t = 0; t < 4; ++t) {
      unsigned e1 = static_cast<unsigned>(rng.range(0, d));
      unsigned e2 = static_cast<unsigned>(rng.range(0, d - e1));
      h.add_term({e1, e2, d - e1 - e2}, rng.gaussian());
    }
    if (h.is_zero()) continue;
    REQUIRE(h.is_homogeneous());
    CHECK(pf(h, 0).euler_degree() == pf(h, 0).scalar_mul(gr(d)));
  }
}

TEST_CASE("ring arithmetic") {
  PolyField inv_w = pf(Polynomial3::one(), 1);
  CHECK(inv_w * pf(one_plus_p2(), 0) == PolyField::one());

  Polynomial3 plus = var(1) + GaussianRational::i() * var(2);
  Polynomial3 minus = var(1) - GaussianRational::i() * var(2);
  CHECK(pf(plus, 0) * pf(minus, 0) ==
        pf(var(1) * var(1) + var(2) * var(2), 0));

  // 1 - 2/(1+p^2) = (p^2-1)/(1+p^2), common denominator by hand
  PolyField lhs = PolyField::one() - inv_w.scalar_mul(gr(2));
  CHECK(lhs == pf(p_squared() - Polynomial3::one(), 1));
}

TEST_CASE("closure: primitives keep elements canonical") {
  test::Rng rng;
  for (int i = 0; i < 200; ++i) {
    PolyField f = rng.field(6, 4, 4);
    REQUIRE(f.is_canonical());
    for (unsigned axis = 1; axis <= 3; ++axis) {
      CHECK(f.partial_derivative(axis).is_canonical());
      CHECK(f.coordinate_multiply(axis).is_canonical());
    }
    CHECK((pf(p_squared() - Polynomial3::one(), 0) * f).is_canonical());
    CHECK((pf(one_plus_p2(), 0) * f).is_canonical());
    CHECK(f.laplacian().is_canonical());
    CHECK(f.euler_degree().is_canonical());
  }
}

TEST_CASE("partials commute and obey Leibniz on the full ring") {
  test::Rng rng;
  for (int i = 0; i < 40; ++i) {
    PolyField f = rng.field(5, 3, 4);
    PolyField g = rng.field(5, 3, 4);
    CHECK(f.partial_derivative(1).partial_derivative(2) ==
          f.partial_derivative(2).partial_derivative(1));
    for (unsigned axis = 1; axis <= 3; ++axis)
      CHECK((f * g).partial_derivative(axis) ==
            f.partial_derivative(axis) * g + f * g.partial_derivative(axis));
  }
}

TEST_CASE("evaluation") {
  PolyField inv_w = pf(Polynomial3::one(), 1);
  CHECK(inv_w.evaluate({0, 0, 0}) == std::complex<double>(1.0, 0.0));
  CHECK(inv_w.evaluate({1, 0, 0}) == std::complex<double>(0.5, 0.0));
  // (p^2-1)/(p^2+1) at (2,0,0) = 3/5
  PolyField g = pf(p_squared() - Polynomial3::one(), 1);
  CHECK(g.evaluate({2, 0, 0}) == std::complex<double>(0.6, 0.0));

  CHECK_THROWS_AS(inv_w.evaluate({0, 0, 0}, 52), std::invalid_argument);

  // multiplicativity within 1e-12 relative
  test::Rng rng;
  for (int i = 0; i < 30; ++i) {
    PolyField a = rng.field(4, 3, 3);
    PolyField b = rng.field(4, 3, 3);
    std::array<double, 3> x{rng.uniform(-3, 3), rng.uniform(-3, 3),
                            rng.uniform(-3, 3)};
    std::complex<double> prod = (a * b).evaluate(x);
    std::complex<double> split = a.evaluate(x) * b.evaluate(x);
    CHECK(std::abs(prod - split) <= 1e-12 * (1.0 + std::abs(prod)));
  }
}

TEST_CASE("gradient packs the three partials") {
  test::Rng rng;
  PolyField f = rng.field(4, 3, 4);
  VectorField g = gradient(f);
  CHECK(g[1] == f.partial_derivative(1));
  CHECK(g[2] == f.partial_derivative(2));
  CHECK(g[3] == f.partial_derivative(3));
  CHECK(g[1].is_canonical());
  CHECK_THROWS_AS(g[0], std::invalid_argument);
}

TEST_CASE("exact evaluation never rounds") {
  PolyField g = pf(p_squared() - Polynomial3::one(), 1);
  GaussianRational v = g.evaluate_exact({mpq_class(2), mpq_class(0), mpq_class(0)});
  CHECK(v == GaussianRational(mpq_class(3, 5)));
}

TEST_CASE("rescaled fields") {
  PolyField a100 = pf(Polynomial3::one(), 2);
  RescaledField r = RescaledField::from_unit(a100, 2);
  CHECK(r.denom_power() == 2);
  CHECK(r.scale() == 2);
  // value check: a100(2p) at p=(1,0,0) is 1/25
  std::complex<double> v = r.evaluate({1, 0, 0});
  CHECK(std::abs(v.real() - 1.0 / 25.0) < 1e-15);

  // proportionality detects a single shared rational factor
  RescaledField twice(gr(2) * r.numerator(), r.denom_power(), r.scale());
  GaussianRational ratio;
  CHECK(twice.proportional_to(r, &ratio));
  CHECK(ratio == gr(2));
  RescaledField other(r.numerator() + var(1), r.denom_power(), r.scale());
  CHECK(!other.proportional_to(r));
}
