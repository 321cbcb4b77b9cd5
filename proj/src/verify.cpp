#include "tribessel/verify.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <tuple>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "tribessel/error.hpp"
#include "tribessel/explicit_table.hpp"
#include "tribessel/four_bessel.hpp"
#include "tribessel/legendre.hpp"
#include "tribessel/polynomial.hpp"
#include "tribessel/quadrature.hpp"
#include "tribessel/triple.hpp"
#include "tribessel/wigner.hpp"

namespace tribessel {

namespace {

constexpr std::array<std::string_view, 8> kSuites = {"appendix-b", "cross-method", "oracle",
                                                     "legendre-identities", "sum-rule", "gradshteyn",
                                                     "wigner", "four-bessel"};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

  /// Interior triangle sides, kept 5% of the allowed range away from degeneracy.
  std::array<double, 3> triangle() {
    const double k1 = uniform(0.5, 2.0), k2 = uniform(0.5, 2.0);
    const double lo = std::abs(k1 - k2), hi = k1 + k2, margin = 0.05 * (hi - lo);
    return {k1, k2, uniform(lo + margin, hi - margin)};
  }

  /// Four sides whose overlap window has width at least 0.2.
  std::array<double, 4> quadrilateral() {
    for (;;) {
      std::array<double, 4> k{uniform(0.5, 2.0), uniform(0.5, 2.0), uniform(0.5, 2.0), uniform(0.5, 2.0)};
      const auto q = QuadKinematics::make(k[0], k[1], k[2], k[3]);
      if (q.k_hi - q.k_lo > 0.2) return k;
    }
  }

 private:
  std::mt19937_64 rng_;
};

double relative(double value, double reference) {
  if (reference == 0.0) return std::abs(value);
  return std::abs(value - reference) / std::abs(reference);
}

CaseResult compare(std::string label, double value, double reference, double tol) {
  CaseResult c{std::move(label), value, reference, relative(value, reference), tol, false};
  c.pass = c.deviation <= tol;
  return c;
}

CaseResult exact_case(std::string label, bool holds) {
  return {std::move(label), holds ? 1.0 : 0.0, 1.0, holds ? 0.0 : 1.0, 0.0, holds};
}

CaseResult failed_case(std::string label, const std::exception& e) {
  return {std::move(label) + " [" + e.what() + "]", 0.0, 0.0, std::numeric_limits<double>::infinity(), 0.0,
          false};
}

std::string fmt_ang(const AngularIndices& a) {
  std::ostringstream s;
  s << "I(" << a.lambda << ";" << a.l1 << "," << a.l2 << "," << a.l3 << ")";
  return s.str();
}

template <typename... T>
std::string fmt_k(const T&... k) {
  std::ostringstream s;
  s.precision(6);
  s << " k=(";
  const char* sep = "";
  ((s << sep << k, sep = ","), ...);
  s << ")";
  return s.str();
}

std::vector<AngularIndices> evaluable_indices(int max_lambda, int max_l) {
  std::vector<AngularIndices> out;
  for (int lambda = 0; lambda <= max_lambda; ++lambda)
    for (int l1 = 0; l1 <= max_l; ++l1)
      for (int l2 = 0; l2 <= max_l; ++l2)
        for (int l3 = 0; l3 <= max_l; ++l3) {
          const AngularIndices a{lambda, l1, l2, l3};
          if (a.master_evaluable()) out.push_back(a);
        }
  return out;
}

// ---------------------------------------------------------------------------

void appendix_b(SuiteReport& r, const VerifyOptions& o) {
  Sampler s(o.seed);
  const int samples = o.quick ? 3 : 10;
  for (const auto& ang : printed_explicit_indices())
    for (int i = 0; i < samples; ++i) {
      const auto [k1, k2, k3] = s.triangle();
      const auto kin = TriangleKinematics::make(k1, k2, k3);
      r.cases.push_back(compare("printed " + fmt_ang(ang) + fmt_k(k1, k2, k3), eval_master(ang, kin).value,
                                printed_explicit_value(ang, kin), 1e-11));
    }
  for (const auto& ang : explicit_table_indices())
    for (int i = 0; i < samples; ++i) {
      const auto [k1, k2, k3] = s.triangle();
      const auto kin = TriangleKinematics::make(k1, k2, k3);
      r.cases.push_back(compare("table " + fmt_ang(ang) + fmt_k(k1, k2, k3), eval_master(ang, kin).value,
                                explicit_table(ang).value(kin), 1e-11));
    }
}

void cross_method(SuiteReport& r, const VerifyOptions& o) {
  struct Job {
    AngularIndices ang;
    std::array<double, 3> k;
  };
  Sampler s(o.seed + 1);
  const int samples = o.quick ? 5 : 25;
  std::vector<Job> jobs;
  for (const auto& ang : evaluable_indices(2, 4))
    for (int i = 0; i < samples; ++i) jobs.push_back({ang, s.triangle()});
  auto run = [&](std::size_t i) {
    const auto& [ang, k] = jobs[i];
    const auto label = fmt_ang(ang) + fmt_k(k[0], k[1], k[2]);
    try {
      const auto kin = TriangleKinematics::make(k[0], k[1], k[2]);
      return compare("master/gervois " + label, eval_master(ang, kin).value, eval_gervois(ang, kin).value, 1e-10);
    } catch (const std::exception& e) {
      return failed_case("master/gervois " + label, e);
    }
  };
  for (auto& c : run_indexed(jobs.size(), run, o.execution)) r.cases.push_back(std::move(c));

  // Two properties of the same closed form: the lambda = 1 route agrees on
  // triangle momenta, and lambda = 0 is symmetric under relabelling the pairs.
  for (const auto& ang : evaluable_indices(1, 4)) {
    const auto [k1, k2, k3] = s.triangle();
    const auto kin = TriangleKinematics::make(k1, k2, k3);
    const double master = eval_master(ang, kin).value;
    if (ang.lambda == 1) {
      r.cases.push_back(compare("lambda1/master " + fmt_ang(ang) + fmt_k(k1, k2, k3),
                                eval_lambda1_general(ang.l1, ang.l2, ang.l3, k1, k2, k3).value, master, 1e-11));
      continue;
    }
    const std::array<int, 3> l{ang.l1, ang.l2, ang.l3};
    const std::array<double, 3> k{k1, k2, k3};
    std::array<int, 3> p{0, 1, 2};
    while (std::next_permutation(p.begin(), p.end())) {
      const AngularIndices perm{0, l[p[0]], l[p[1]], l[p[2]]};
      const double v = eval_master(perm, TriangleKinematics::make(k[p[0]], k[p[1]], k[p[2]])).value;
      r.cases.push_back(compare("permuted " + fmt_ang(perm) + fmt_k(k[p[0]], k[p[1]], k[p[2]]), v, master, 1e-11));
    }
  }
}

void oracle_suite(SuiteReport& r, const VerifyOptions& o) {
  struct Job {
    AngularIndices ang;
    std::array<double, 3> k;
  };
  Sampler s(o.seed + 2);
  const int samples = o.quick ? 1 : 5;
  std::vector<Job> jobs;
  for (const auto& ang : evaluable_indices(2, 3))
    for (int i = 0; i < samples; ++i) jobs.push_back({ang, s.triangle()});
  OracleOptions inner = o.oracle;
  inner.parallel = false;
  auto run = [&](std::size_t i) {
    const auto& [ang, k] = jobs[i];
    const auto label = "oracle/master " + fmt_ang(ang) + fmt_k(k[0], k[1], k[2]);
    try {
      const double ref = eval_master(ang, TriangleKinematics::make(k[0], k[1], k[2])).value;
      const double v = oracle_triple(ang, k[0], k[1], k[2], o.oracle_tol, inner).value;
      return compare(label, v, ref, ang.lambda == 0 ? 2e-5 : 1e-6);
    } catch (const std::exception& e) {
      return failed_case(label, e);
    }
  };
  for (auto& c : run_indexed(jobs.size(), run, o.execution)) r.cases.push_back(std::move(c));
}

void gradshteyn(SuiteReport& r, const VerifyOptions& o) {
  Sampler s(o.seed + 3);
  const int samples = o.quick ? 2 : 5;
  for (int l3 = 0; l3 <= 6; ++l3)
    for (int l1 = 0; l1 <= l3; ++l1) {
      const int l2 = l3 - l1;
      for (int i = 0; i < samples; ++i) {
        const double k1 = s.uniform(0.5, 2.0), k2 = s.uniform(0.5, 2.0), K = 1.05 * (k1 + k2);
        r.cases.push_back(compare("lambda1 " + fmt_ang({1, l1, l2, l3}) + fmt_k(k1, k2, K),
                                  eval_lambda1_general(l1, l2, l3, k1, k2, K).value,
                                  gradshteyn_value(l1, l2, l3, k1, k2, K), 1e-11));
      }
    }
}

void sum_rule(SuiteReport& r, const VerifyOptions& o) {
  Sampler s(o.seed + 4);
  const int samples = o.quick ? 20 : 100;
  for (int lambda = 0; lambda <= 6; ++lambda)
    for (int i = 0; i < samples; ++i) {
      const auto [k1, k2, k3] = s.triangle();
      const auto [lhs, rhs] = sum_rule_sides(lambda, k1, k2, k3);
      auto c = compare("sum rule lambda=" + std::to_string(lambda) + fmt_k(k1, k2, k3), lhs, rhs, 1e-11);
      c.deviation = std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
      c.pass = sum_rule_check(lambda, k1, k2, k3) && c.deviation <= 1e-11;
      r.cases.push_back(c);
    }
}

// ---------------------------------------------------------------------------

const std::array<Rational, 7> kOdeOrders = {Rational(-7, 2), Rational(-2), Rational(-1, 2), Rational(0),
                                            Rational(1, 2),  Rational(2),  Rational(7, 2)};

// The printed polynomial parts for l <= 4, before 1/Gamma(|l-m|+1) ((1+x)/(1-x))^(m/2).
// Exact: the polynomials cancel down to (1 -+ x)^|m| factors for integer orders.
Rational printed_closed_form(int l, const Rational& m, const Rational& x) {
  const Rational x2 = x * x, m2 = m * m;
  switch (l) {
    case 0: return 1;
    case 1: return x - m;
    case 2: return 3 * x2 - 3 * x * m - 1 + m2;
    case 3: return 15 * x2 * x - 15 * x2 * m - 9 * x + 6 * x * m2 + 4 * m - m2 * m;
    case 4:
      return 105 * x2 * x2 - 105 * x2 * x * m - 90 * x2 + 45 * x2 * m2 + 55 * x * m - 10 * x * m2 * m + 9 -
             10 * m2 + m2 * m2;
  }
  throw InvalidArgument("no printed closed form for this degree");
}

std::string fmt_lm(int l, const Rational& m, double x) {
  std::ostringstream s;
  s << "P_" << l << "^" << m.get_str() << "(" << x << ")";
  return s.str();
}

void legendre_identities(SuiteReport& r, const VerifyOptions& o) {
  Sampler s(o.seed + 5);
  const int samples = o.quick ? 10 : 50;

  for (int l = 0; l <= 8; ++l)
    for (int m = -l; m <= l; ++m)
      for (int i = 0; i < samples; ++i) {
        const double x = s.uniform(-0.99, 0.99);
        r.cases.push_back(compare("classical " + fmt_lm(l, m, x), assoc_legendre_general(l, Rational(m), x),
                                  rodrigues_legendre(l, m, x), 1e-12));
      }

  for (int l = 0; l <= 4; ++l)
    for (int i = 0; i < 20; ++i) {
      const Rational m(s.integer(-16, 16), s.integer(1, 4));
      const Rational mc = make_rational(m.get_num(), m.get_den());
      const double x = s.uniform(-0.95, 0.95), md = to_double(mc);
      const double closed = to_double(printed_closed_form(l, mc, exact_rational(x))) / std::tgamma(std::abs(l - md) + 1.0) *
                            std::pow((1 + x) / (1 - x), md / 2);
      r.cases.push_back(compare("closed form " + fmt_lm(l, mc, x), assoc_legendre_general(l, mc, x), closed, 1e-12));
    }

  for (int l = 0; l <= 5; ++l)
    for (const auto& m : kOdeOrders)
      for (double x : {-0.6, 0.3, 0.75}) r.cases.push_back(exact_case("parity " + fmt_lm(l, m, x), parity_identity_check(l, m, x)));

  // Residual of the associated Legendre equation. The polynomial part is exact at the
  // rational nodes x and x +- h; only the ((1+x)/(1-x))^(m/2) / Gamma factor is rounded,
  // to 50 digits. Two central stencils (h, h/2) are Richardson-combined: a single
  // h = 1e-5 stencil has an O(h^2) floor of a few 1e-7 once |P| reaches ~100.
  using Wide = boost::multiprecision::cpp_bin_float_50;
  const auto wide = [](const Rational& q) { return Wide(q.get_num().get_str()) / Wide(q.get_den().get_str()); };
  for (int l = 0; l <= 5; ++l)
    for (const auto& m : kOdeOrders) {
      const RationalPolynomial poly = legendre_polynomial_part(l).at_m(m);
      const Wide mw = wide(m);
      const Wide gamma = boost::math::tgamma(Wide(abs(Wide(l) - mw) + 1));
      const auto p = [&](const Rational& x) {
        return wide(poly(x)) / gamma * boost::multiprecision::pow((1 + wide(x)) / (1 - wide(x)), mw / 2);
      };
      for (const Rational& x : {Rational(-1, 2), Rational(0), Rational(1, 2)}) {
        const double xd = to_double(x);
        r.cases.push_back(compare("wide value " + fmt_lm(l, m, xd), assoc_legendre_general(l, m, xd),
                                  static_cast<double>(p(x)), 1e-13));
        const auto stencil = [&](const Rational& h) {
          const Wide p0 = p(x), pp = p(x + h), pm = p(x - h), hw = wide(h);
          return std::pair<Wide, Wide>{(pp - pm) / (2 * hw), (pp - 2 * p0 + pm) / (hw * hw)};
        };
        const auto [d1h, d2h] = stencil(Rational(1, 100000));
        const auto [d1q, d2q] = stencil(Rational(1, 200000));
        const Wide d1 = (4 * d1q - d1h) / 3, d2 = (4 * d2q - d2h) / 3, xw = wide(x);
        const Wide residual = (1 - xw * xw) * d2 - 2 * xw * d1 + (l * (l + 1) - mw * mw / (1 - xw * xw)) * p(x);
        CaseResult c{"ODE " + fmt_lm(l, m, xd), static_cast<double>(residual), 0.0,
                     std::abs(static_cast<double>(residual)), 1e-8, false};
        c.pass = c.deviation <= c.tolerance;
        r.cases.push_back(c);
      }
    }

  for (int l = 0; l <= 5; ++l)
    for (int m = -l; m <= l; ++m) {
      auto f = [&](double x) {
        const double p = assoc_legendre_general(l, Rational(m), x);
        return p * p;
      };
      const double q = quad::integrate_adaptive(f, -1.0, 1.0, 0.0, 1e-14).value;
      const double ref = 2.0 / (2 * l + 1) * to_double(make_rational(factorial(l + m), factorial(l - m)));
      r.cases.push_back(compare("norm " + fmt_lm(l, m, 0.0), q, ref, 1e-10));
    }

  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int n = 0; n <= 4; ++n) {
        auto f = [&](double x) {
          const double p = jacobi_p(n, Rational(a), Rational(b), x);
          return std::pow(1 - x, a) * std::pow(1 + x, b) * p * p;
        };
        const double q = quad::integrate_adaptive(f, -1.0, 1.0, 0.0, 1e-14).value;
        const Rational ref = Rational(Integer(1) << (a + b + 1)) *
                             make_rational(factorial(n + a) * factorial(n + b),
                                           factorial(n) * (a + b + 2 * n + 1) * factorial(n + a + b));
        r.cases.push_back(compare("jacobi norm n=" + std::to_string(n) + " a=" + std::to_string(a) +
                                      " b=" + std::to_string(b),
                                  q, to_double(ref), 1e-10));
      }

  for (int l = 1; l <= 5; ++l)
    for (const auto& m : kOdeOrders) {
      if (m > l - 1) continue;
      for (double x : {-0.7, 0.2, 0.65}) {
        const double v = assoc_legendre_recurrence_step(l, m, x, assoc_legendre_general(l, m, x),
                                                        assoc_legendre_general(l - 1, m, x));
        r.cases.push_back(compare("recurrence " + fmt_lm(l + 1, m, x), v, assoc_legendre_general(l + 1, m, x), 1e-12));
      }
    }

  for (int l = 0; l <= 6; ++l)
    for (int m = -l; m <= l; ++m)
      r.cases.push_back(exact_case("derivative identity l=" + std::to_string(l) + " m=" + std::to_string(m),
                                   derivative_identity_check(l, m, 0.3)));
}

// ---------------------------------------------------------------------------

void wigner_suite(SuiteReport& r, const VerifyOptions&) {
  using Key3 = std::array<int, 6>;
  std::map<Key3, RadicalRational> three;
  const auto tj = [&](int j1, int j2, int j3, int m1, int m2, int m3) -> RadicalRational {
    const Key3 key{j1, j2, j3, m1, m2, m3};
    auto it = three.find(key);
    if (it != three.end()) return it->second;
    return three.emplace(key, three_j({j1, j2, j3, m1, m2, m3})).first->second;
  };

  std::size_t checked = 0;
  bool symmetric = true;
  std::string first_bad;
  for (int j1 = 0; j1 <= 6; ++j1)
    for (int j2 = 0; j2 <= 6; ++j2)
      for (int j3 = std::abs(j1 - j2); j3 <= std::min(j1 + j2, 6); ++j3)
        for (int m1 = -j1; m1 <= j1; ++m1)
          for (int m2 = -j2; m2 <= j2; ++m2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > j3) continue;
            const auto v = tj(j1, j2, j3, m1, m2, m3);
            const int sign = (j1 + j2 + j3) % 2 == 0 ? 1 : -1;
            const RadicalRational odd = sign > 0 ? v : -v;
            const bool ok = tj(j2, j3, j1, m2, m3, m1) == v && tj(j3, j1, j2, m3, m1, m2) == v &&
                            tj(j2, j1, j3, m2, m1, m3) == odd && tj(j1, j3, j2, m1, m3, m2) == odd &&
                            tj(j3, j2, j1, m3, m2, m1) == odd && tj(j1, j2, j3, -m1, -m2, -m3) == odd;
            ++checked;
            if (!ok && symmetric) {
              symmetric = false;
              std::ostringstream s;
              s << " first failure (" << j1 << " " << j2 << " " << j3 << "; " << m1 << " " << m2 << " " << m3 << ")";
              first_bad = s.str();
            }
          }
  r.cases.push_back(exact_case("3j symmetries over " + std::to_string(checked) + " symbols, j <= 6" + first_bad, symmetric));

  for (int j1 = 0; j1 <= 5; ++j1)
    for (int j2 = 0; j2 <= 5; ++j2)
      for (int j3 = std::abs(j1 - j2); j3 <= std::min(j1 + j2, 5); ++j3)
        for (int m3 = -j3; m3 <= j3; ++m3) {
          Rational sum = 0;
          for (int m1 = -j1; m1 <= j1; ++m1) {
            const int m2 = -m1 - m3;
            if (std::abs(m2) > j2) continue;
            sum += tj(j1, j2, j3, m1, m2, m3).square();
          }
          sum *= 2 * j3 + 1;
          std::ostringstream s;
          s << "3j orthogonality (" << j1 << " " << j2 << " " << j3 << ") m3=" << m3;
          r.cases.push_back(exact_case(s.str(), sum == 1));
        }

  std::map<std::array<int, 6>, RadicalRational> six;
  const auto sj = [&](const std::array<int, 6>& k) -> RadicalRational {
    auto it = six.find(k);
    if (it != six.end()) return it->second;
    return six.emplace(k, six_j({k[0], k[1], k[2], k[3], k[4], k[5]})).first->second;
  };
  checked = 0;
  symmetric = true;
  first_bad.clear();
  // {a b c; d e f}: columns (a,d), (b,e), (c,f).
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = std::abs(a - b); c <= std::min(a + b, 6); ++c)
        for (int d = 0; d <= 6; ++d)
          for (int e = 0; e <= 6; ++e)
            for (int f = 0; f <= 6; ++f) {
              const SixJQuery q{a, b, c, d, e, f};
              if (!q.triangles()) continue;
              const std::array<int, 6> k{a, b, c, d, e, f};
              const auto v = sj(k);
              const std::array<std::array<int, 6>, 8> images = {{{b, a, c, e, d, f},
                                                                 {a, c, b, d, f, e},
                                                                 {c, b, a, f, e, d},
                                                                 {b, c, a, e, f, d},
                                                                 {c, a, b, f, d, e},
                                                                 {d, e, c, a, b, f},
                                                                 {d, b, f, a, e, c},
                                                                 {a, e, f, d, b, c}}};
              bool ok = true;
              for (const auto& img : images) ok = ok && sj(img) == v;
              ++checked;
              if (!ok && symmetric) {
                symmetric = false;
                std::ostringstream s;
                s << " first failure {" << a << " " << b << " " << c << "; " << d << " " << e << " " << f << "}";
                first_bad = s.str();
              }
            }
  r.cases.push_back(exact_case("6j symmetries over " + std::to_string(checked) + " symbols, entries <= 6" + first_bad,
                               symmetric));

  for (int l = 0; l <= 10; ++l)
    for (int lp = 0; lp <= l; ++lp)
      r.cases.push_back(exact_case("binomial 3j identity l=" + std::to_string(l) + " l'=" + std::to_string(lp),
                                   binomial_3j_identity_check(l, lp)));
}

void four_bessel(SuiteReport& r, const VerifyOptions& o) {
  struct Job {
    KernelIndices idx;
    std::array<double, 4> k;
  };
  Sampler s(o.seed + 7);
  const int samples = o.quick ? 2 : 10;
  std::vector<Job> jobs;
  for (int nm = 0; nm <= 3; ++nm)
    for (int n = 0; n <= nm; ++n)
      for (int L = 0; L <= nm; ++L)
        for (int i = 0; i < samples; ++i) jobs.push_back({{L, n, nm - n}, s.quadrilateral()});
  OracleOptions inner = o.oracle;
  inner.parallel = false;
  auto run = [&](std::size_t i) {
    const auto& [idx, k] = jobs[i];
    std::ostringstream label;
    label << "four L=" << idx.L << " N=" << idx.N << " M=" << idx.M << fmt_k(k[0], k[1], k[2], k[3]);
    try {
      const double v = eval_four_bessel(idx, QuadKinematics::make(k[0], k[1], k[2], k[3]), false).value;
      const double ref = oracle_quadruple(idx.L, idx.N, idx.M, k[0], k[1], k[2], k[3], o.oracle_tol, inner).value;
      return compare(label.str(), v, ref, 1e-4);
    } catch (const std::exception& e) {
      return failed_case(label.str(), e);
    }
  };
  for (auto& c : run_indexed(jobs.size(), run, o.execution)) r.cases.push_back(std::move(c));
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  static const std::map<std::string_view, std::function<void(SuiteReport&, const VerifyOptions&)>> table = {
      {"appendix-b", appendix_b},
      {"cross-method", cross_method},
      {"oracle", oracle_suite},
      {"legendre-identities", legendre_identities},
      {"sum-rule", sum_rule},
      {"gradshteyn", gradshteyn},
      {"wigner", wigner_suite},
      {"four-bessel", four_bessel},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw InvalidArgument("unknown suite: " + std::string(name));
  SuiteReport r;
  r.name = std::string(name);
  const auto start = std::chrono::steady_clock::now();
  it->second(r, options);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& c : r.cases) {
    if (!c.pass) ++r.failures;
    r.max_deviation = std::max(r.max_deviation, c.deviation);
  }
  return r;
}

double gradshteyn_value(int l1, int l2, int l3, double k1, double k2, double K) {
  return std::ldexp(1.0, l3 - l1 - l2 - 2) * std::pow(std::numbers::pi, 1.5) * std::pow(k1, l1) *
         std::pow(k2, l2) / std::pow(K, l3 + 2) * std::tgamma(l3 + 1.5) / (std::tgamma(l2 + 1.5) * std::tgamma(l1 + 1.5));
}

double rodrigues_legendre(int l, int m, double x) {
  if (l < 0 || std::abs(m) > l) throw InvalidArgument("rodrigues_legendre needs |m| <= l");
  // (x^2 - 1)^l
  const auto base = RationalPolynomial(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}).pow(l);
  const auto d = base.derivative(static_cast<unsigned>(l + m));
  // Exact at the binary value of x; reordering the expanded polynomial in floating
  // point loses up to ~1e-4 relative near |x| = 1.
  const Rational xr(x);
  const long double one_minus = static_cast<long double>(to_double(Rational(1) - xr * xr));
  long double v = static_cast<long double>(to_double(d(xr) * make_rational(1, (Integer(1) << l) * factorial(l)))) *
                  std::pow(one_minus, static_cast<long double>(m) / 2.0L);
  if (m % 2 != 0) v = -v;
  return static_cast<double>(v);
}

}  // namespace tribessel
