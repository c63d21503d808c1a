#include "doctest.h"
#include "fock/rational.hpp"
#include "support.hpp"

using namespace fock;

TEST_CASE("stored in lowest terms with positive denominator") {
  GaussianRational a(6, -4);
  CHECK(a.re() == mpq_class(-3, 2));
  CHECK(a.re().get_den() == 2);

  test::Rng rng;
  for (int i = 0; i < 50; ++i) {
    GaussianRational z = rng.gaussian() * rng.gaussian() + rng.gaussian();
    CHECK(z.re().get_den() > 0);
    CHECK(z.im().get_den() > 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), z.re().get_num().get_mpz_t(),
            z.re().get_den().get_mpz_t());
    CHECK(g == 1);
  }
}

TEST_CASE("field axioms hold exactly") {
  test::Rng rng;
  for (int i = 0; i < 100; ++i) {
    GaussianRational a = rng.gaussian(), b = rng.gaussian(), c = rng.gaussian();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == GaussianRational(0));
    if (!a.is_zero()) {
      CHECK(a / a == GaussianRational(1));
      CHECK(a * (b / a) == b);
    }
  }
}

TEST_CASE("imaginary unit and conjugation") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK(i.conj() == -i);

  GaussianRational z(mpq_class(3, 2), mpq_class(-5, 7));
  CHECK(z * z.conj() == GaussianRational(z.norm2()));
  CHECK(z.norm2() == mpq_class(3, 2) * mpq_class(3, 2) + mpq_class(5, 7) * mpq_class(5, 7));
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), std::domain_error);
  CHECK_THROWS_AS(GaussianRational(1, 0), std::invalid_argument);
}

TEST_CASE("string round trip is exact") {
  test::Rng rng;
  for (int i = 0; i < 50; ++i) {
    GaussianRational z = rng.gaussian();
    CHECK(GaussianRational::from_strings(z.re_str(), z.im_str()) == z);
  }
  CHECK(GaussianRational::from_strings("6/4", "-2/8") ==
        GaussianRational(mpq_class(3, 2), mpq_class(-1, 4)));
}
