#pragma once

// The momentum-space operator algebra: angular momentum, the Runge-Lenz
// vector in both the a-space and b-space function rings, the differential
// Schroedinger operator whose eigenfunctions are the b states, and the
// compositional Casimir sum L^2 + A^2.

#include "fock/linear_operator.hpp"

namespace fock {

// The a-space Runge-Lenz component contains the product of the shifted
// degree operator with coordinate multiplication. The two possible
// orderings differ by i*p_axis; only DegreeAfterMultiply (coordinate
// multiplication applied first, degree operator second) annihilates the
// one-dimensional n=1 multiplet and conjugates to the b-space form, so it
// is the default. The other ordering stays available for comparison.
enum class RungeLenzOrdering {
  DegreeAfterMultiply,   // f -> i (l+1)(p_axis f) - (i/2)(p^2-1) d_axis f
  DegreeBeforeMultiply,  // f -> i p_axis (l+1) f  - (i/2)(p^2-1) d_axis f
};

// L_axis = -i (p x grad)_axis; same form in a-space and b-space.
LinearOperator angular_momentum(unsigned axis);

LinearOperator runge_lenz_a(
    unsigned axis,
    RungeLenzOrdering ordering = RungeLenzOrdering::DegreeAfterMultiply);

// b-space component: f -> i p_axis (l f) - (i/2)(p^2-1) d_axis f.
LinearOperator runge_lenz_b(unsigned axis);

// -((p^2+1)^2/4) Lap + ((p^2+1)/2) (p.grad); eigenvalue n^2-1 on b_{nlm}.
LinearOperator hamiltonian_b();

// Sum_i L_i L_i + Sum_i A_i A_i built compositionally from the b-space
// components; equality with hamiltonian_b() is a theorem checked by the
// verification suites, not an assumption.
LinearOperator casimir_sum();

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

// f -> (1+p^2)^power * op((1+p^2)^{-power} f), as ring-element bookkeeping.
LinearOperator conjugate_by_weight(const LinearOperator& op, int power);

struct OperatorTriple {
  LinearOperator x, y, z;

  const LinearOperator& operator[](unsigned axis) const {
    switch (axis) {
      case 1: return x;
      case 2: return y;
      case 3: return z;
    }
    throw std::invalid_argument("axis out of range");
  }

  VectorField apply(const PolyField& f) const {
    return {x.apply(f), y.apply(f), z.apply(f)};
  }
};

OperatorTriple angular_momentum_triple();
OperatorTriple runge_lenz_a_triple(
    RungeLenzOrdering ordering = RungeLenzOrdering::DegreeAfterMultiply);
OperatorTriple runge_lenz_b_triple();

// Sum_i compose(a_i, b_i), the scalar contraction of two vector operators.
LinearOperator dot_compose(const OperatorTriple& a, const OperatorTriple& b);

}  // namespace fock
