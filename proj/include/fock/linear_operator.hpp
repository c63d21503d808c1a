#pragma once

// Composable linear maps on the PolyField ring, held as immutable shared
// expression trees over six primitives (identity, partial, coordinate
// multiplication, multiplication by a fixed ring element, Euler degree,
// Laplacian) and three combinators (compose, add, scale).

#include <cstddef>
#include <memory>
#include <vector>

#include "fock/polyfield.hpp"

namespace fock {

class LinearOperator {
 public:
  enum class Kind {
    Identity,
    Partial,
    CoordinateMul,
    RingMul,
    EulerDegree,
    Laplacian,
    Compose,
    Add,
    Scale,
  };

  LinearOperator() : LinearOperator(identity()) {}

  static LinearOperator identity();
  static LinearOperator partial(unsigned axis);
  static LinearOperator coordinate_mul(unsigned axis);
  static LinearOperator ring_mul(PolyField g);
  static LinearOperator euler_degree();
  static LinearOperator laplacian();

  // compose(A, B) applies B first: f -> A(B(f)).
  friend LinearOperator compose(const LinearOperator& a,
                                const LinearOperator& b);
  friend LinearOperator operator+(const LinearOperator& a,
                                  const LinearOperator& b);
  friend LinearOperator operator-(const LinearOperator& a,
                                  const LinearOperator& b);
  friend LinearOperator scale(GaussianRational c, const LinearOperator& a);

  PolyField apply(const PolyField& f) const;

  // Tree inspection (serialization, structural tests).
  Kind kind() const;
  unsigned axis() const;                // Partial / CoordinateMul
  const GaussianRational& scalar() const;  // Scale
  const PolyField& field() const;       // RingMul
  std::size_t child_count() const;
  LinearOperator child(std::size_t i) const;

 private:
  struct Node;
  explicit LinearOperator(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static PolyField apply_node(const Node& n, const PolyField& f);
  std::shared_ptr<const Node> node_;
};

LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
LinearOperator scale(GaussianRational c, const LinearOperator& a);

}  // namespace fock
