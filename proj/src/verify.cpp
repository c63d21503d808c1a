#include "fock/verify.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fock/physics_operators.hpp"
#include "fock/serialization.hpp"
#include "fock/sphere.hpp"

namespace fock {

namespace {

// splitmix64: deterministic across platforms, good enough for test points
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }
};

int levi_civita(unsigned i, unsigned j, unsigned k) {
  if (i == j || j == k || i == k) return 0;
  if ((i == 1 && j == 2 && k == 3) || (i == 2 && j == 3 && k == 1) ||
      (i == 3 && j == 1 && k == 2))
    return 1;
  return -1;
}

void record(CheckReport& rep, bool collect, const std::string& identity,
            const std::string& element, bool zero) {
  if (!zero) rep.residual += 1;
  if (collect || !zero)
    rep.records.push_back({identity, element, zero});
}

std::string axis_pair(const char* fmt, unsigned i, unsigned k) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, i, k);
  return buf;
}

std::string nlm_label(int n, int l, int m) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "b(%d,%d,%d)", n, l, m);
  return buf;
}

void finish_exact(CheckReport& rep) { rep.passed = rep.residual <= rep.tolerance; }

// ---- suites ----------------------------------------------------------------

std::vector<CheckReport> suite_eigen(const VerifyOptions& opt) {
  LinearOperator h = hamiltonian_b();
  LinearOperator lz = angular_momentum(3);
  OperatorTriple l = angular_momentum_triple();
  LinearOperator l2 = dot_compose(l, l);

  CheckReport ham = CheckReport::make("eigen_hamiltonian", 0, 0);
  CheckReport zc = CheckReport::make("eigen_lz", 0, 0);
  CheckReport sq = CheckReport::make("eigen_l_squared", 0, 0);
  int states = 0;
  for (int n = 1; n <= opt.max_n; ++n)
    for (int lq = 0; lq < n; ++lq)
      for (int m = -lq; m <= lq; ++m) {
        ++states;
        PolyField b = state_b(n, lq, m);
        std::string el = nlm_label(n, lq, m);
        char id[64];

        std::snprintf(id, sizeof id, "H*b = %d*b", n * n - 1);
        bool ok = h.apply(b) == b.scalar_mul(GaussianRational(n * n - 1));
        record(ham, opt.collect_records, id, el, ok);

        std::snprintf(id, sizeof id, "Lz*b = %d*b", m);
        ok = lz.apply(b) == b.scalar_mul(GaussianRational(m));
        record(zc, opt.collect_records, id, el, ok);

        std::snprintf(id, sizeof id, "L^2*b = %d*b", lq * (lq + 1));
        ok = l2.apply(b) == b.scalar_mul(GaussianRational(lq * (lq + 1)));
        record(sq, opt.collect_records, id, el, ok);
      }
  for (CheckReport* r : {&ham, &zc, &sq}) {
    r->add_meta("max_n", static_cast<double>(opt.max_n));
    r->add_meta("states", static_cast<double>(states));
    finish_exact(*r);
  }
  return {ham, zc, sq};
}

CheckReport commutator_sweep(const std::string& name, const OperatorTriple& l,
                             const OperatorTriple& a,
                             const std::vector<PolyField>& gens,
                             const VerifyOptions& opt) {
  CheckReport rep = CheckReport::make(name, 0, 0);
  // precompute the 18 identity operators
  std::vector<std::pair<std::string, LinearOperator>> ids;
  for (unsigned i = 1; i <= 3; ++i)
    for (unsigned k = 1; k <= 3; ++k) {
      LinearOperator la = commutator(l[i], a[k]);
      LinearOperator aa = commutator(a[i], a[k]);
      for (unsigned lev = 1; lev <= 3; ++lev) {
        int e = levi_civita(i, k, lev);
        if (e == 0) continue;
        GaussianRational c = GaussianRational(-e) * GaussianRational::i();
        la = la + scale(c, a[lev]);
        aa = aa + scale(c, l[lev]);
      }
      ids.emplace_back(axis_pair("[L%u,A%u] - i e_ikl A_l", i, k), la);
      ids.emplace_back(axis_pair("[A%u,A%u] - i e_ikl L_l", i, k), aa);
    }
  ids.emplace_back("sum_i A_i L_i", dot_compose(a, l));
  ids.emplace_back("sum_i L_i A_i", dot_compose(l, a));

  for (const PolyField& g : gens) {
    std::string el = to_text(g);
    for (const auto& [idname, op] : ids)
      record(rep, opt.collect_records, idname, el, op.apply(g).is_zero());
  }
  rep.add_meta("generators", static_cast<double>(gens.size()));
  rep.add_meta("identities", static_cast<double>(ids.size()));
  finish_exact(rep);
  return rep;
}

std::vector<CheckReport> suite_commutators(const VerifyOptions& opt) {
  std::vector<PolyField> gens = spanning_set(opt.degree, opt.denom_power);
  OperatorTriple l = angular_momentum_triple();

  // pure angular-momentum algebra [L_i, L_k] = i e_ikl L_l
  CheckReport ll = CheckReport::make("angular_momentum_algebra", 0, 0);
  for (unsigned i = 1; i <= 3; ++i)
    for (unsigned k = 1; k <= 3; ++k) {
      LinearOperator idop = commutator(l[i], l[k]);
      for (unsigned lev = 1; lev <= 3; ++lev) {
        int e = levi_civita(i, k, lev);
        if (e == 0) continue;
        idop = idop + scale(GaussianRational(-e) * GaussianRational::i(), l[lev]);
      }
      for (const PolyField& g : gens)
        record(ll, opt.collect_records, axis_pair("[L%u,L%u] - i e_ikl L_l", i, k),
               to_text(g), idop.apply(g).is_zero());
    }
  finish_exact(ll);

  CheckReport b = commutator_sweep("so4_algebra_b_space", l,
                                   runge_lenz_b_triple(), gens, opt);
  CheckReport a = commutator_sweep("so4_algebra_a_space", l,
                                   runge_lenz_a_triple(), gens, opt);
  return {ll, b, a};
}

std::vector<CheckReport> suite_casimir(const VerifyOptions& opt) {
  std::vector<PolyField> gens = spanning_set(opt.degree, opt.denom_power);
  LinearOperator diff = casimir_sum() - hamiltonian_b();

  CheckReport closed = CheckReport::make("casimir_matches_closed_form", 0, 0);
  for (const PolyField& g : gens)
    record(closed, opt.collect_records, "L^2 + A^2 - H", to_text(g),
           diff.apply(g).is_zero());
  closed.add_meta("generators", static_cast<double>(gens.size()));
  finish_exact(closed);

  // eigenvalue on eigenstates: measured as the exact coefficient ratio,
  // then compared with n^2-1 (the sign is part of what gets verified)
  CheckReport eig = CheckReport::make("casimir_eigenvalue", 0, 0);
  LinearOperator cas = casimir_sum();
  std::string measured_list;
  for (int n = 1; n <= std::min(opt.max_n, 4); ++n)
    for (int lq = 0; lq < n; ++lq) {
      PolyField b = state_b(n, lq, 0);
      PolyField img = cas.apply(b);
      GaussianRational lambda(0);
      bool exact_multiple;
      if (img.is_zero()) {
        exact_multiple = true;
      } else {
        lambda = img.numerator().terms().begin()->second /
                 b.numerator().terms().begin()->second;
        exact_multiple = img == b.scalar_mul(lambda);
      }
      bool ok = exact_multiple && lambda == GaussianRational(n * n - 1);
      char id[96];
      std::snprintf(id, sizeof id, "(L^2+A^2)*b = %s*b (expect %d)",
                    lambda.re_str().c_str(), n * n - 1);
      record(eig, opt.collect_records, id, nlm_label(n, lq, 0), ok);
      if (lq == 0) {
        if (!measured_list.empty()) measured_list += " ";
        measured_list += "n=" + std::to_string(n) + ":" + lambda.re_str();
      }
    }
  eig.add_meta("measured_eigenvalues", measured_list);
  eig.add_meta("sign", "positive");
  finish_exact(eig);
  return {closed, eig};
}

std::vector<CheckReport> suite_conjugation(const VerifyOptions& opt) {
  std::vector<PolyField> gens = spanning_set(opt.degree, opt.denom_power);
  CheckReport rep = CheckReport::make("conjugation_pins_ordering", 0, 0);

  bool alternative_failed_somewhere = false;
  for (unsigned axis = 1; axis <= 3; ++axis) {
    LinearOperator pinned =
        conjugate_by_weight(
            runge_lenz_a(axis, RungeLenzOrdering::DegreeAfterMultiply), 2) -
        runge_lenz_b(axis);
    LinearOperator alternative =
        conjugate_by_weight(
            runge_lenz_a(axis, RungeLenzOrdering::DegreeBeforeMultiply), 2) -
        runge_lenz_b(axis);
    char id[96];
    std::snprintf(id, sizeof id, "(1+p^2)^2 A_a%u (1+p^2)^-2 - A_b%u", axis, axis);
    for (const PolyField& g : gens) {
      record(rep, opt.collect_records, id, to_text(g),
             pinned.apply(g).is_zero());
      if (!alternative.apply(g).is_zero()) alternative_failed_somewhere = true;
    }
  }
  rep.add_meta("pinned_ordering", "degree_after_multiply");
  rep.add_meta("alternative_ordering_fails",
               alternative_failed_somewhere ? "true" : "false");
  // the pin is only meaningful if the other reading does not also pass
  if (!alternative_failed_somewhere) rep.residual += 1;
  rep.add_meta("generators", static_cast<double>(gens.size()));
  finish_exact(rep);
  return {rep};
}

std::vector<CheckReport> suite_rotation(const VerifyOptions& opt) {
  CheckReport rep = CheckReport::make("fock_rotation_correspondence", 0, 0);
  OperatorTriple ab = runge_lenz_b_triple();

  // all sphere monomials xi^e zeta^d of total degree <= rotation_degree
  std::vector<Exponents<4>> monos;
  for (unsigned d = 0; d <= static_cast<unsigned>(opt.rotation_degree); ++d)
    for (unsigned e1 = 0; e1 <= d; ++e1)
      for (unsigned e2 = 0; e1 + e2 <= d; ++e2)
        for (unsigned e3 = 0; e1 + e2 + e3 <= d; ++e3)
          monos.push_back({e1, e2, e3, d - e1 - e2 - e3});

  const char* varnames[4] = {"xi1", "xi2", "xi3", "zeta"};
  for (const auto& e : monos) {
    SpherePolynomial f = SpherePolynomial::monomial(e, GaussianRational(1));
    std::string el;
    for (int v = 0; v < 4; ++v)
      for (unsigned j = 0; j < e[v]; ++j)
        el += (el.empty() ? "" : "*") + std::string(varnames[v]);
    if (el.empty()) el = "1";
    PolyField pf = pullback(f);
    for (unsigned axis = 1; axis <= 3; ++axis) {
      PolyField lhs = pullback(rotation_generator(axis, f));
      PolyField rhs = ab[axis].apply(pf);
      char id[64];
      std::snprintf(id, sizeof id, "pullback . rot%u = A_b%u . pullback", axis,
                    axis);
      record(rep, opt.collect_records, id, el, lhs == rhs);
    }
  }
  rep.add_meta("monomials", static_cast<double>(monos.size()));
  rep.add_meta("degree", static_cast<double>(opt.rotation_degree));
  finish_exact(rep);
  return {rep};
}

std::vector<CheckReport> suite_kernel(const VerifyOptions& opt) {
  SplitMix64 rng(opt.seed);
  double kernel_tol = opt.tol("kernel", 1e-12);
  double round_tol = opt.tol("roundtrip", 1e-12);

  double worst_kernel = 0;
  double worst_round = 0;
  int pairs = 0;
  while (pairs < 1000) {
    std::array<double, 3> p{rng.uniform(-5, 5), rng.uniform(-5, 5),
                            rng.uniform(-5, 5)};
    std::array<double, 3> q{rng.uniform(-5, 5), rng.uniform(-5, 5),
                            rng.uniform(-5, 5)};
    double d2 = 0;
    for (int k = 0; k < 3; ++k) d2 += (p[k] - q[k]) * (p[k] - q[k]);
    if (d2 < 1e-12) continue;
    ++pairs;
    worst_kernel = std::max(worst_kernel, kernel_identity_residual(p, q));

    SpherePoint s = stereographic_forward(p);
    std::array<double, 3> back = stereographic_inverse(s);
    for (int k = 0; k < 3; ++k)
      worst_round = std::max(worst_round, std::abs(back[k] - p[k]));
    double constraint =
        s.xi[0] * s.xi[0] + s.xi[1] * s.xi[1] + s.xi[2] * s.xi[2] +
        s.xi0 * s.xi0;
    worst_round = std::max(worst_round, std::abs(constraint - 1.0));
  }

  CheckReport kr = CheckReport::make("kernel_identity", worst_kernel, kernel_tol);
  kr.add_meta("pairs", static_cast<double>(pairs));
  CheckReport rr =
      CheckReport::make("stereographic_roundtrip", worst_round, round_tol);
  rr.add_meta("points", static_cast<double>(pairs));

  CheckReport area =
      sphere_area_check(opt.quadrature(), opt.tol("area", 1e-8));
  return {kr, rr, area};
}

std::vector<CheckReport> suite_integral(const VerifyOptions& opt) {
  double tol = opt.tol("integral", 1e-6);
  QuadratureSpec spec = opt.quadrature();
  std::vector<CheckReport> out;
  if (opt.integral_n > 0) {
    out.push_back(
        integral_equation_residual(opt.integral_n, opt.integral_l, spec, tol));
    return out;
  }
  const std::pair<int, int> cases[] = {{1, 0}, {2, 0}, {2, 1}, {3, 0}};
  for (auto [n, l] : cases)
    out.push_back(integral_equation_residual(n, l, spec, tol));
  out.push_back(integral_equation_negative_control(
      spec, opt.tol("integral_control_min", 1e-2)));
  return out;
}

std::vector<CheckReport> suite_fourier(const VerifyOptions& opt) {
  double tol = opt.tol("fourier", 1e-8);
  QuadratureSpec spec = opt.quadrature();
  std::vector<CheckReport> out;
  for (int n = 1; n <= 3; ++n)
    out.push_back(fourier_radial_check(n, spec, tol));
  out.push_back(
      fourier_negative_control(spec, opt.tol("fourier_control_min", 1e-1)));
  return out;
}

std::vector<CheckReport> suite_gegenbauer(const VerifyOptions& opt) {
  double tol = opt.tol("gegenbauer", 1e-10);
  CheckReport rep = CheckReport::make("gauss_gegenbauer_proportionality", 0, tol);
  double worst = 0;
  for (int n = 1; n <= 5; ++n)
    for (int l = 0; l < n; ++l) {
      int k = n - l - 1;
      HypergeomCoeffs h = hypergeom_poly(k, l);
      double lo = 0, hi = 0, mean = 0;
      bool first = true;
      for (int j = 0; j < 20; ++j) {
        double xi0 = -0.95 + 0.1 * j;
        double u = (1.0 - xi0) / 2.0;
        double f = 0, upow = 1;
        for (const mpq_class& c : h.coeffs) {
          f += c.get_d() * upow;
          upow *= u;
        }
        double c = gegenbauer(mpq_class(l + 1), k, xi0);
        double r = f / c;
        if (first) {
          lo = hi = r;
          first = false;
        } else {
          lo = std::min(lo, r);
          hi = std::max(hi, r);
        }
        mean += r;
      }
      mean /= 20.0;
      double spread = (hi - lo) / std::abs(mean);
      worst = std::max(worst, spread);
    }
  rep.residual = worst;
  rep.passed = worst <= tol;
  rep.add_meta("max_n", 5.0);
  rep.add_meta("samples_per_case", 20.0);
  return {rep};
}

std::vector<CheckReport> suite_overlap(const VerifyOptions& opt) {
  return {overlap_matrix_check(opt.overlap_max_n, opt.quadrature(),
                               opt.tol("overlap", 1e-8))};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "eigen",    "commutators", "casimir", "conjugation", "rotation",
      "kernel",   "integral",    "fourier", "gegenbauer",  "overlap"};
  return names;
}

std::vector<PolyField> spanning_set(int degree, int denom_power) {
  if (degree < 0 || denom_power < 0)
    throw std::invalid_argument("spanning-set bounds must be >= 0");
  std::vector<PolyField> gens;
  for (unsigned d = 0; d <= static_cast<unsigned>(degree); ++d)
    for (unsigned e1 = 0; e1 <= d; ++e1)
      for (unsigned e2 = 0; e1 + e2 <= d; ++e2) {
        unsigned e3 = d - e1 - e2;
        for (unsigned nn = 0; nn <= static_cast<unsigned>(denom_power); ++nn)
          gens.emplace_back(
              Polynomial3::monomial({e1, e2, e3}, GaussianRational(1)), nn);
      }
  return gens;
}

std::vector<CheckReport> run_suite(const std::string& suite,
                                   const VerifyOptions& opt) {
  if (suite == "eigen") return suite_eigen(opt);
  if (suite == "commutators") return suite_commutators(opt);
  if (suite == "casimir") return suite_casimir(opt);
  if (suite == "conjugation") return suite_conjugation(opt);
  if (suite == "rotation") return suite_rotation(opt);
  if (suite == "kernel") return suite_kernel(opt);
  if (suite == "integral") return suite_integral(opt);
  if (suite == "fourier") return suite_fourier(opt);
  if (suite == "gegenbauer") return suite_gegenbauer(opt);
  if (suite == "overlap") return suite_overlap(opt);
  if (suite == "all") {
    std::vector<CheckReport> out;
    for (const std::string& s : suite_names()) {
      std::vector<CheckReport> part = run_suite(s, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown verification suite: " + suite);
}

}  // namespace fock
