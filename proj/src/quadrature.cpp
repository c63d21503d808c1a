#include "fock/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <stdexcept>

namespace fock {

void QuadratureSpec::validate() const {
  if (nodes < 16) throw std::invalid_argument("quadrature needs nodes >= 16");
  for (std::size_t i = 1; i < domain_split.size(); ++i)
    if (!(domain_split[i - 1] < domain_split[i]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
  if (scheme != "gauss-legendre-composite")
    throw std::invalid_argument("unknown quadrature scheme: " + scheme);
  if (!(precision_target > 0))
    throw std::invalid_argument("precision target must be positive");
}

QuadratureSpec QuadratureSpec::refined() const {
  QuadratureSpec r = *this;
  r.nodes *= 2;
  return r;
}

namespace {

struct TableDeleter {
  void operator()(gsl_integration_glfixed_table* t) const {
    gsl_integration_glfixed_table_free(t);
  }
};

using Table = std::unique_ptr<gsl_integration_glfixed_table, TableDeleter>;

Table make_table(int order) {
  if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be >= 1");
  return Table(gsl_integration_glfixed_table_alloc(static_cast<size_t>(order)));
}

double panel(const Integrand& f, double a, double b,
             const gsl_integration_glfixed_table* t, size_t order) {
  double acc = 0;
  for (size_t i = 0; i < order; ++i) {
    double x, w;
    gsl_integration_glfixed_point(a, b, i, &x, &w, t);
    acc += w * f(x);
  }
  return acc;
}

}  // namespace

double gauss_panel(const Integrand& f, double a, double b, int order) {
  Table t = make_table(order);
  return panel(f, a, b, t.get(), static_cast<size_t>(order));
}

double integrate_breakpoints(const Integrand& f,
                             const std::vector<double>& breakpoints,
                             int order) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("need at least two breakpoints");
  Table t = make_table(order);
  double acc = 0;
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    acc += panel(f, breakpoints[i - 1], breakpoints[i], t.get(),
                 static_cast<size_t>(order));
  return acc;
}

double integrate_graded(const Integrand& f, double a, double b, int order,
                        bool singular_at_right, int levels) {
  if (!(a < b)) throw std::invalid_argument("empty interval");
  double len = b - a;
  std::vector<double> bps;
  bps.reserve(levels + 3);
  bps.push_back(a);
  if (singular_at_right) {
    for (int j = 1; j <= levels + 1; ++j)
      bps.push_back(b - len * std::ldexp(1.0, -j));
  } else {
    for (int j = levels + 1; j >= 1; --j)
      bps.push_back(a + len * std::ldexp(1.0, -j));
  }
  bps.push_back(b);
  // drop any breakpoints that collapsed in floating point
  std::vector<double> clean;
  clean.push_back(bps.front());
  for (double x : bps)
    if (x > clean.back()) clean.push_back(x);
  return integrate_breakpoints(f, clean, order);
}

double integrate_tail(const Integrand& f, double a, int order, int panels) {
  if (panels < 1) throw std::invalid_argument("tail needs at least one panel");
  auto mapped = [&](double t) {
    double r = a + t / (1.0 - t);
    double jac = 1.0 / ((1.0 - t) * (1.0 - t));
    return f(r) * jac;
  };
  std::vector<double> bps;
  bps.reserve(panels + 1);
  for (int j = 0; j <= panels; ++j)
    bps.push_back(static_cast<double>(j) / panels);
  return integrate_breakpoints(mapped, bps, order);
}

}  // namespace fock
