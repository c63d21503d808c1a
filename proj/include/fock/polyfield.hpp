#pragma once

// The closed function ring of the momentum-space Coulomb problem: elements
// are P(p) / (1+p^2)^N with P a multivariate polynomial over Gaussian
// rationals. The ring is closed under partial derivatives, coordinate
// multiplication, the Euler degree operator and the Laplacian, so every
// wavefunction and every operator image lands back in it. Canonical form:
// the numerator carries no (1+p^2) factor unless N = 0, and a zero
// numerator forces N = 0. All values are immutable after construction.

#include <array>
#include <complex>
#include <cstdint>

#include "fock/polynomial.hpp"

namespace fock {

// 1 + p1^2 + p2^2 + p3^2
const Polynomial3& one_plus_p2();

// (1 + p^2)^k for k >= 0
Polynomial3 weight_poly(unsigned k);

// p1^2 + p2^2 + p3^2
Polynomial3 p_squared();

class PolyField {
 public:
  PolyField() = default;  // zero

  // Canonicalizes numerator/(1+p^2)^denomPower on construction.
  PolyField(Polynomial3 numerator, unsigned denom_power);

  static PolyField constant(GaussianRational c) {
    return {Polynomial3::constant(std::move(c)), 0};
  }
  static PolyField one() { return constant(GaussianRational(1)); }

  // (1+p^2)^k as a ring element; negative k gives 1/(1+p^2)^{-k}.
  static PolyField weight(int k);

  const Polynomial3& numerator() const { return num_; }
  unsigned denom_power() const { return denom_power_; }
  bool is_zero() const { return num_.is_zero(); }

  // Re-runs the divisibility test; used by property tests.
  bool is_canonical() const;

  PolyField operator+(const PolyField& o) const;
  PolyField operator-(const PolyField& o) const;
  PolyField operator*(const PolyField& o) const;
  PolyField operator-() const;
  PolyField scalar_mul(const GaussianRational& c) const;

  friend bool operator==(const PolyField& a, const PolyField& b) {
    return a.denom_power_ == b.denom_power_ && a.num_ == b.num_;
  }
  friend bool operator!=(const PolyField& a, const PolyField& b) {
    return !(a == b);
  }

  // d/dp_axis via d[P/w^N] = [(dP) w - 2N p_axis P] / w^{N+1}, w = 1+p^2.
  PolyField partial_derivative(unsigned axis) const;
  PolyField coordinate_multiply(unsigned axis) const;  // f -> p_axis * f
  PolyField euler_degree() const;                      // (p . grad) f
  PolyField laplacian() const;

  // Exact value at an exact rational point.
  GaussianRational evaluate_exact(const std::array<mpq_class, 3>& p) const;

  // Value at a real point: rational arithmetic throughout, rounded once at
  // the end to `precision` binary digits (>= 53).
  std::complex<double> evaluate(const std::array<double, 3>& p,
                                unsigned precision = 53) const;

 private:
  void normalize();

  Polynomial3 num_;
  unsigned denom_power_ = 0;
};

struct VectorField {
  PolyField x, y, z;

  const PolyField& operator[](unsigned axis) const {
    switch (axis) {
      case 1: return x;
      case 2: return y;
      case 3: return z;
    }
    throw std::invalid_argument("axis out of range");
  }
};

VectorField gradient(const PolyField& f);

// Image of a PolyField under the substitution p -> s*p: numerator over
// (1 + s^2 p^2)^N. The unit-radius ring is the s = 1 case; physical
// momenta use s = n.
class RescaledField {
 public:
  RescaledField() = default;
  RescaledField(Polynomial3 numerator, unsigned denom_power, mpq_class scale);

  static RescaledField from_unit(const PolyField& f, const mpq_class& scale);

  const Polynomial3& numerator() const { return num_; }
  unsigned denom_power() const { return denom_power_; }
  const mpq_class& scale() const { return scale_; }

  friend bool operator==(const RescaledField& a, const RescaledField& b) {
    return a.denom_power_ == b.denom_power_ && a.scale_ == b.scale_ &&
           a.num_ == b.num_;
  }

  // True when *this == c * o for a single Gaussian-rational c != 0; the
  // constant is written to *ratio when given.
  bool proportional_to(const RescaledField& o,
                       GaussianRational* ratio = nullptr) const;

  std::complex<double> evaluate(const std::array<double, 3>& p) const;

 private:
  Polynomial3 num_;
  unsigned denom_power_ = 0;
  mpq_class scale_ = 1;
};

}  // namespace fock
