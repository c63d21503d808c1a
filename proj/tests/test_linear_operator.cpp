#include "doctest.h"
#include "fock/linear_operator.hpp"
#include "support.hpp"

using namespace fock;
using test::gr;
using test::var;

namespace {

PolyField pf(Polynomial3 num, unsigned n) { return {std::move(num), n}; }

// random operator tree of bounded depth, for the linearity property
LinearOperator random_operator(test::Rng& rng, int depth) {
  if (depth == 0) {
    switch (rng.range(0, 5)) {
      case 0: return LinearOperator::identity();
      case 1: return LinearOperator::partial(static_cast<unsigned>(rng.range(1, 3)));
      case 2: return LinearOperator::coordinate_mul(static_cast<unsigned>(rng.range(1, 3)));
      case 3: return LinearOperator::ring_mul(rng.field(3, 2, 2));
      case 4: return LinearOperator::euler_degree();
      default: return LinearOperator::laplacian();
    }
  }
  switch (rng.range(0, 2)) {
    case 0:
      return compose(random_operator(rng, depth - 1), random_operator(rng, depth - 1));
    case 1:
      return random_operator(rng, depth - 1) + random_operator(rng, depth - 1);
    default:
      return scale(rng.gaussian(), random_operator(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("primitive laws") {
  PolyField f = pf(var(3), 0);
  CHECK(LinearOperator::identity().apply(f) == f);

  PolyField inv_w = pf(Polynomial3::one(), 1);
  LinearOperator twice = scale(gr(2), LinearOperator::identity());
  CHECK(twice.apply(inv_w) == inv_w.scalar_mul(gr(2)));

  // d/dp1 (p1 * 1) = 1
  LinearOperator op =
      compose(LinearOperator::partial(1), LinearOperator::coordinate_mul(1));
  CHECK(op.apply(PolyField::one()) == PolyField::one());

  CHECK(LinearOperator::laplacian().apply(pf(p_squared(), 0)) ==
        PolyField::constant(gr(6)));

  LinearOperator shifted = LinearOperator::euler_degree() + LinearOperator::identity();
  CHECK(shifted.apply(pf(var(1) * var(2), 0)) ==
        pf(gr(3) * var(1) * var(2), 0));
}

TEST_CASE("axis arguments are validated") {
  CHECK_THROWS_AS(LinearOperator::partial(0), std::invalid_argument);
  CHECK_THROWS_AS(LinearOperator::partial(4), std::invalid_argument);
  CHECK_THROWS_AS(LinearOperator::coordinate_mul(9), std::invalid_argument);
}

TEST_CASE("linearity holds exactly for arbitrary trees") {
  test::Rng rng;
  for (int i = 0; i < 60; ++i) {
    LinearOperator op = random_operator(rng, 3);
    PolyField f = rng.field(4, 3, 3);
    PolyField g = rng.field(4, 3, 3);
    GaussianRational alpha = rng.gaussian(), beta = rng.gaussian();
    PolyField combined = op.apply(f.scalar_mul(alpha) + g.scalar_mul(beta));
    PolyField split =
        op.apply(f).scalar_mul(alpha) + op.apply(g).scalar_mul(beta);
    CHECK(combined == split);
  }
}

TEST_CASE("tree inspection") {
  LinearOperator op = scale(GaussianRational::i(),
                            compose(LinearOperator::partial(2),
                                    LinearOperator::coordinate_mul(1)));
  REQUIRE(op.kind() == LinearOperator::Kind::Scale);
  CHECK(op.scalar() == GaussianRational::i());
  REQUIRE(op.child_count() == 1);
  LinearOperator inner = op.child(0);
  REQUIRE(inner.kind() == LinearOperator::Kind::Compose);
  CHECK(inner.child(0).axis() == 2);
  CHECK(inner.child(1).axis() == 1);
  CHECK_THROWS_AS(op.child(3), std::out_of_range);
  CHECK_THROWS_AS(inner.scalar(), std::logic_error);
}
