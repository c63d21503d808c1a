#include "fock/polyfield.hpp"

namespace fock {

const Polynomial3& one_plus_p2() {
  static const Polynomial3 w = [] {
    Polynomial3 p = Polynomial3::one();
    for (unsigned axis = 1; axis <= 3; ++axis) {
      Exponents<3> e{};
      e[axis - 1] = 2;
      p.add_term(e, GaussianRational(1));
    }
    return p;
  }();
  return w;
}

Polynomial3 weight_poly(unsigned k) {
  Polynomial3 r = Polynomial3::one();
  for (unsigned j = 0; j < k; ++j) r *= one_plus_p2();
  return r;
}

Polynomial3 p_squared() {
  return one_plus_p2() - Polynomial3::one();
}

PolyField::PolyField(Polynomial3 numerator, unsigned denom_power)
    : num_(std::move(numerator)), denom_power_(denom_power) {
  normalize();
}

void PolyField::normalize() {
  if (num_.is_zero()) {
    denom_power_ = 0;
    return;
  }
  while (denom_power_ > 0) {
    auto q = num_.divide_exact(one_plus_p2());
    if (!q) break;
    num_ = std::move(*q);
    --denom_power_;
  }
}

bool PolyField::is_canonical() const {
  if (num_.is_zero()) return denom_power_ == 0;
  if (denom_power_ == 0) return true;
  return !num_.divide_exact(one_plus_p2()).has_value();
}

PolyField PolyField::weight(int k) {
  if (k >= 0) return {weight_poly(static_cast<unsigned>(k)), 0};
  return {Polynomial3::one(), static_cast<unsigned>(-k)};
}

PolyField PolyField::operator+(const PolyField& o) const {
  unsigned m = std::max(denom_power_, o.denom_power_);
  Polynomial3 n = num_ * weight_poly(m - denom_power_) +
                  o.num_ * weight_poly(m - o.denom_power_);
  return {std::move(n), m};
}

PolyField PolyField::operator-(const PolyField& o) const {
  return *this + (-o);
}

PolyField PolyField::operator-() const {
  PolyField r;
  r.num_ = -num_;
  r.denom_power_ = denom_power_;
  return r;
}

PolyField PolyField::operator*(const PolyField& o) const {
  return {num_ * o.num_, denom_power_ + o.denom_power_};
}

PolyField PolyField::scalar_mul(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  PolyField r;
  r.num_ = c * num_;
  r.denom_power_ = denom_power_;
  return r;
}

PolyField PolyField::partial_derivative(unsigned axis) const {
  if (denom_power_ == 0) {
    PolyField r;
    r.num_ = num_.derivative(axis);
    return r;
  }
  Polynomial3 n = num_.derivative(axis) * one_plus_p2() -
                  GaussianRational(mpq_class(2 * denom_power_)) *
                      (Polynomial3::variable(axis) * num_);
  return {std::move(n), denom_power_ + 1};
}

PolyField PolyField::coordinate_multiply(unsigned axis) const {
  return {Polynomial3::variable(axis) * num_, denom_power_};
}

PolyField PolyField::euler_degree() const {
  PolyField acc;
  for (unsigned axis = 1; axis <= 3; ++axis)
    acc = acc + partial_derivative(axis).coordinate_multiply(axis);
  return acc;
}

PolyField PolyField::laplacian() const {
  PolyField acc;
  for (unsigned axis = 1; axis <= 3; ++axis)
    acc = acc + partial_derivative(axis).partial_derivative(axis);
  return acc;
}

GaussianRational PolyField::evaluate_exact(
    const std::array<mpq_class, 3>& p) const {
  GaussianRational n = num_.eval_exact(p);
  mpq_class w = 1 + p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  return n / GaussianRational(pow_mpq(w, denom_power_));
}

std::complex<double> PolyField::evaluate(const std::array<double, 3>& p,
                                         unsigned precision) const {
  if (precision < 53) throw std::invalid_argument("precision below 53 bits");
  // Doubles are dyadic rationals; the conversion is exact and the whole
  // computation stays rational until the final rounding.
  std::array<mpq_class, 3> q{mpq_class(p[0]), mpq_class(p[1]),
                             mpq_class(p[2])};
  GaussianRational v = evaluate_exact(q);
  mpf_class re(0, precision), im(0, precision);
  re = v.re();
  im = v.im();
  return {re.get_d(), im.get_d()};
}

VectorField gradient(const PolyField& f) {
  return {f.partial_derivative(1), f.partial_derivative(2),
          f.partial_derivative(3)};
}

namespace {

// 1 + s^2 (p1^2+p2^2+p3^2)
Polynomial3 scaled_weight_base(const mpq_class& s) {
  Polynomial3 p = Polynomial3::one();
  GaussianRational s2(s * s);
  for (unsigned axis = 1; axis <= 3; ++axis) {
    Exponents<3> e{};
    e[axis - 1] = 2;
    p.add_term(e, s2);
  }
  return p;
}

}  // namespace

RescaledField::RescaledField(Polynomial3 numerator, unsigned denom_power,
                             mpq_class scale)
    : num_(std::move(numerator)), denom_power_(denom_power),
      scale_(std::move(scale)) {
  if (scale_ == 0) throw std::invalid_argument("zero scale");
  if (num_.is_zero()) {
    denom_power_ = 0;
    return;
  }
  Polynomial3 base = scaled_weight_base(scale_);
  while (denom_power_ > 0) {
    auto q = num_.divide_exact(base);
    if (!q) break;
    num_ = std::move(*q);
    --denom_power_;
  }
}

RescaledField RescaledField::from_unit(const PolyField& f,
                                       const mpq_class& scale) {
  return {f.numerator().scale_argument(scale), f.denom_power(), scale};
}

bool RescaledField::proportional_to(const RescaledField& o,
                                    GaussianRational* ratio) const {
  if (num_.is_zero() || o.num_.is_zero()) return num_.is_zero() == o.num_.is_zero();
  if (denom_power_ != o.denom_power_ || scale_ != o.scale_) return false;
  GaussianRational c =
      num_.terms().begin()->second / o.num_.terms().begin()->second;
  if (num_ != c * o.num_) return false;
  if (ratio) *ratio = c;
  return true;
}

std::complex<double> RescaledField::evaluate(
    const std::array<double, 3>& p) const {
  std::complex<double> n = num_.eval(p);
  double s = scale_.get_d();
  double w = 1.0 + s * s * (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  double d = 1.0;
  for (unsigned j = 0; j < denom_power_; ++j) d *= w;
  return n / d;
}

}  // namespace fock
