#pragma once

// Sparse multivariate polynomials over GaussianRational, keyed by exponent
// tuples in graded-lexicographic order (leading term first). The same
// template backs the momentum-space ring (3 variables p1,p2,p3) and the
// Fock-sphere ring (4 variables xi1,xi2,xi3,zeta).

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "fock/rational.hpp"

namespace fock {

template <std::size_t NV>
using Exponents = std::array<unsigned, NV>;

template <std::size_t NV>
constexpr unsigned total_degree(const Exponents<NV>& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

// Graded lex, descending: higher total degree first, ties broken
// lexicographically. map::begin() is the leading term.
template <std::size_t NV>
struct GradedLexGreater {
  bool operator()(const Exponents<NV>& a, const Exponents<NV>& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

template <std::size_t NV>
class Polynomial {
 public:
  using Exp = Exponents<NV>;
  using TermMap = std::map<Exp, GaussianRational, GradedLexGreater<NV>>;

  Polynomial() = default;

  static Polynomial zero() { return {}; }

  static Polynomial constant(GaussianRational c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(Exp{}, std::move(c));
    return p;
  }

  static Polynomial one() { return constant(GaussianRational(1)); }

  // axis in 1..NV
  static Polynomial variable(unsigned axis) {
    check_axis(axis);
    Exp e{};
    e[axis - 1] = 1;
    return monomial(e, GaussianRational(1));
  }

  static Polynomial monomial(const Exp& e, GaussianRational c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  unsigned degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  GaussianRational coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational(0) : it->second;
  }

  void add_term(const Exp& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp e;
        for (std::size_t k = 0; k < NV; ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const GaussianRational& c, const Polynomial& a) {
    Polynomial r;
    if (c.is_zero()) return r;
    for (const auto& [e, t] : a.terms_) r.terms_.emplace(e, c * t);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial derivative(unsigned axis) const {
    check_axis(axis);
    const std::size_t k = axis - 1;
    Polynomial r;
    for (const auto& [e, c] : terms_) {
      if (e[k] == 0) continue;
      Exp d = e;
      d[k] -= 1;
      r.terms_.emplace(d, GaussianRational(mpq_class(e[k])) * c);
    }
    return r;
  }

  // Substitution x -> s*x for every variable; coefficients pick up s^|e|.
  Polynomial scale_argument(const mpq_class& s) const {
    Polynomial r;
    for (const auto& [e, c] : terms_) {
      GaussianRational sc = GaussianRational(pow_mpq(s, total_degree(e))) * c;
      if (!sc.is_zero()) r.terms_.emplace(e, std::move(sc));
    }
    return r;
  }

  GaussianRational eval_exact(const std::array<mpq_class, NV>& x) const {
    GaussianRational acc(0);
    for (const auto& [e, c] : terms_) {
      mpq_class m(1);
      for (std::size_t k = 0; k < NV; ++k) m *= pow_mpq(x[k], e[k]);
      acc += c * GaussianRational(m);
    }
    return acc;
  }

  std::complex<double> eval(const std::array<double, NV>& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
      double m = 1.0;
      for (std::size_t k = 0; k < NV; ++k)
        for (unsigned j = 0; j < e[k]; ++j) m *= x[k];
      acc += c.to_complex() * m;
    }
    return acc;
  }

  // Exact single-divisor division. Returns the quotient when g divides
  // *this exactly, nullopt otherwise. A single divisor is a Groebner basis
  // of the ideal it generates, so "leading term not reducible" decides
  // non-divisibility immediately.
  std::optional<Polynomial> divide_exact(const Polynomial& g) const {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Polynomial f = *this;
    Polynomial q;
    const auto& ltg = *g.terms_.begin();
    while (!f.is_zero()) {
      const auto& ltf = *f.terms_.begin();
      Exp d;
      for (std::size_t k = 0; k < NV; ++k) {
        if (ltf.first[k] < ltg.first[k]) return std::nullopt;
        d[k] = ltf.first[k] - ltg.first[k];
      }
      GaussianRational c = ltf.second / ltg.second;
      Polynomial t = monomial(d, c);
      q += t;
      f -= t * g;
    }
    return q;
  }

 private:
  static void check_axis(unsigned axis) {
    if (axis < 1 || axis > NV) throw std::invalid_argument("axis out of range");
  }

  TermMap terms_;
};

using Polynomial3 = Polynomial<3>;
using Polynomial4 = Polynomial<4>;  // Fock-sphere variables (xi1,xi2,xi3,zeta)

}  // namespace fock
