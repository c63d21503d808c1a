#pragma once

// Exact complex coefficients a + b*i with arbitrary-precision rational
// real and imaginary parts. All arithmetic is exact; nothing in this
// type ever rounds.

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace fock {

class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    re_.canonicalize();
  }

  // Parses "a/b" (or "a") fractions; GMP requires explicit canonicalization
  // for string input.
  static GaussianRational from_strings(const std::string& re,
                                       const std::string& im) {
    mpq_class r(re), i(im);
    r.canonicalize();
    i.canonicalize();
    return {r, i};
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  // |z|^2 as an exact rational.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    mpq_class n = o.norm2();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational& b) {
    return a /= b;
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {-a.re_, -a.im_};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  std::string re_str() const { return re_.get_str(); }
  std::string im_str() const { return im_.get_str(); }

 private:
  mpq_class re_, im_;
};

inline mpq_class pow_mpq(const mpq_class& x, unsigned e) {
  mpq_class r(1);
  for (unsigned j = 0; j < e; ++j) r *= x;
  return r;
}

inline GaussianRational pow_gr(const GaussianRational& x, unsigned e) {
  GaussianRational r(1);
  for (unsigned j = 0; j < e; ++j) r *= x;
  return r;
}

}  // namespace fock
