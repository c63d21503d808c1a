#include "fock/physics_operators.hpp"

namespace fock {

namespace {

const GaussianRational kI = GaussianRational::i();

int levi_civita(unsigned i, unsigned j, unsigned k) {
  if (i == j || j == k || i == k) return 0;
  // even permutations of (1,2,3)
  if ((i == 1 && j == 2 && k == 3) || (i == 2 && j == 3 && k == 1) ||
      (i == 3 && j == 1 && k == 2))
    return 1;
  return -1;
}

// (p^2 - 1)/2 as a fixed ring element
PolyField half_p2_minus_one() {
  Polynomial3 n = p_squared() - Polynomial3::one();
  return PolyField(n, 0).scalar_mul(GaussianRational(1, 2));
}

}  // namespace

LinearOperator angular_momentum(unsigned axis) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("axis out of range");
  // L_i = -i e_{ijk} p_j d_k
  LinearOperator acc = scale(GaussianRational(0), LinearOperator::identity());
  for (unsigned j = 1; j <= 3; ++j)
    for (unsigned k = 1; k <= 3; ++k) {
      int e = levi_civita(axis, j, k);
      if (e == 0) continue;
      LinearOperator term = compose(LinearOperator::coordinate_mul(j),
                                    LinearOperator::partial(k));
      acc = acc + scale(GaussianRational(-e) * kI, term);
    }
  return acc;
}

LinearOperator runge_lenz_a(unsigned axis, RungeLenzOrdering ordering) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("axis out of range");
  LinearOperator degree_plus_one =
      LinearOperator::euler_degree() + LinearOperator::identity();
  LinearOperator first =
      ordering == RungeLenzOrdering::DegreeAfterMultiply
          ? compose(degree_plus_one, LinearOperator::coordinate_mul(axis))
          : compose(LinearOperator::coordinate_mul(axis), degree_plus_one);
  LinearOperator second = compose(LinearOperator::ring_mul(half_p2_minus_one()),
                                  LinearOperator::partial(axis));
  return scale(kI, first) + scale(-kI, second);
}

LinearOperator runge_lenz_b(unsigned axis) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("axis out of range");
  LinearOperator first = compose(LinearOperator::coordinate_mul(axis),
                                 LinearOperator::euler_degree());
  LinearOperator second = compose(LinearOperator::ring_mul(half_p2_minus_one()),
                                  LinearOperator::partial(axis));
  return scale(kI, first) + scale(-kI, second);
}

LinearOperator hamiltonian_b() {
  PolyField w2(weight_poly(2), 0);
  PolyField w1(weight_poly(1), 0);
  LinearOperator kinetic = scale(
      GaussianRational(-1, 4),
      compose(LinearOperator::ring_mul(w2), LinearOperator::laplacian()));
  LinearOperator degree = scale(
      GaussianRational(1, 2),
      compose(LinearOperator::ring_mul(w1), LinearOperator::euler_degree()));
  return kinetic + degree;
}

LinearOperator casimir_sum() {
  LinearOperator acc = scale(GaussianRational(0), LinearOperator::identity());
  for (unsigned axis = 1; axis <= 3; ++axis) {
    LinearOperator l = angular_momentum(axis);
    LinearOperator a = runge_lenz_b(axis);
    acc = acc + compose(l, l) + compose(a, a);
  }
  return acc;
}

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
  return compose(a, b) - compose(b, a);
}

LinearOperator conjugate_by_weight(const LinearOperator& op, int power) {
  return compose(LinearOperator::ring_mul(PolyField::weight(power)),
                 compose(op, LinearOperator::ring_mul(PolyField::weight(-power))));
}

OperatorTriple angular_momentum_triple() {
  return {angular_momentum(1), angular_momentum(2), angular_momentum(3)};
}

OperatorTriple runge_lenz_a_triple(RungeLenzOrdering ordering) {
  return {runge_lenz_a(1, ordering), runge_lenz_a(2, ordering),
          runge_lenz_a(3, ordering)};
}

OperatorTriple runge_lenz_b_triple() {
  return {runge_lenz_b(1), runge_lenz_b(2), runge_lenz_b(3)};
}

LinearOperator dot_compose(const OperatorTriple& a, const OperatorTriple& b) {
  LinearOperator acc = scale(GaussianRational(0), LinearOperator::identity());
  for (unsigned axis = 1; axis <= 3; ++axis)
    acc = acc + compose(a[axis], b[axis]);
  return acc;
}

}  // namespace fock
