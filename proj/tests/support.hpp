#pragma once

// Shared test fixtures: a deterministic RNG and random ring elements.

#include <cstdint>

#include "fock/polyfield.hpp"

namespace fock::test {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed = 0x9d2c5680c0ffee42ULL) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double uniform(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  mpq_class rational() {
    mpq_class q(range(-9, 9), range(1, 9));
    q.canonicalize();
    return q;
  }

  GaussianRational gaussian() { return {rational(), rational()}; }

  Polynomial3 polynomial(unsigned max_degree, int terms) {
    Polynomial3 p;
    for (int t = 0; t < terms; ++t) {
      Exponents<3> e{};
      unsigned budget = max_degree;
      for (int k = 0; k < 3; ++k) {
        e[k] = static_cast<unsigned>(range(0, budget));
        budget -= e[k];
      }
      p.add_term(e, gaussian());
    }
    return p;
  }

  PolyField field(unsigned max_degree = 6, unsigned max_denom = 4,
                  int terms = 5) {
    return {polynomial(max_degree, terms),
            static_cast<unsigned>(range(0, max_denom))};
  }
};

inline Polynomial3 var(unsigned axis) { return Polynomial3::variable(axis); }

inline GaussianRational gr(long num, long den = 1) {
  return {num, den};
}

}  // namespace fock::test
