#include "tribessel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "tribessel/bessel.hpp"
#include "tribessel/error.hpp"

namespace tribessel {

namespace {

using cplx = std::complex<double>;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Prepared {
  int power = 0;
  std::vector<BesselFactor> factors;
  bool vanishes = false;  // some j_n(0 r) with n > 0
};

Prepared prepare(const OscillatoryIntegralSpec& spec) {
  if (!(spec.tol > 0.0)) throw InvalidArgument("oracle tolerance must be positive");
  Prepared p;
  p.power = spec.power;
  int order_sum = 0;
  for (const auto& f : spec.factors) {
    if (f.order < 0) throw InvalidArgument("negative Bessel order");
    if (!(f.k >= 0.0) || !std::isfinite(f.k)) throw InvalidArgument("wavenumbers must be finite and >= 0");
    if (f.k == 0.0) {
      if (f.order > 0) p.vanishes = true;
      continue;  // j_0(0) = 1
    }
    p.factors.push_back(f);
    order_sum += f.order;
  }
  if (p.vanishes) return p;
  if (p.power + order_sum <= -1) throw ConvergenceDomain("integrand is not integrable at the origin");
  if (p.power - static_cast<int>(p.factors.size()) > -1)
    throw ConvergenceDomain("integrand envelope does not decay fast enough for convergence");
  return p;
}

double integrand(const Prepared& p, double r) {
  double v = std::pow(r, p.power);
  for (const auto& f : p.factors) v *= sph_bessel_j(f.order, f.k * r);
  return v;
}

// Coefficients of j_n(z) = 1/2 sum_sigma e^{i sigma z} u_{n,sigma}(z).
struct Hankel {
  int order;
  double k;
  std::vector<double> a;  // (n+k)! / (k! (n-k)! 2^k)

  Hankel(int n, double kk) : order(n), k(kk) {
    double v = 1.0;
    for (int j = 0; j <= n; ++j) {
      a.push_back(v);
      v *= static_cast<double>((n + j + 1)) * static_cast<double>(n - j) / (2.0 * (j + 1));
    }
  }

  // u_{n,+}(z) = (-i)^(n+1)/z sum i^j a_j z^-j; u_{n,-}(z) = i^(n+1)/z sum (-i)^j a_j z^-j
  cplx u(int sigma, cplx z) const {
    const cplx step = cplx(0.0, sigma) / z;
    cplx term = 1.0, sum = 0.0;
    for (double aj : a) {
      sum += aj * term;
      term *= step;
    }
    cplx phase = 1.0;
    const cplx unit(0.0, -sigma);
    for (int i = 0; i <= order; ++i) phase *= unit;
    return phase * sum / z;
  }
};

// 1/2^n r^p prod_i u_{n_i, sigma_i}(k_i r)
cplx slow_part(const Prepared& p, const std::vector<Hankel>& h, const std::vector<int>& sigma, cplx r) {
  cplx v = std::pow(r, p.power) * std::ldexp(1.0, -static_cast<int>(h.size()));
  for (std::size_t i = 0; i < h.size(); ++i) v *= h[i].u(sigma[i], h[i].k * r);
  return v;
}

template <typename F>
quad::Result<double> panel_sum(F&& f, const std::vector<double>& edges, double abs_tol, bool parallel) {
  const long n = static_cast<long>(edges.size()) - 1;
  std::vector<quad::Result<double>> parts(static_cast<std::size_t>(std::max(n, 0L)));
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (long i = 0; i < n; ++i) parts[i] = quad::integrate_adaptive(f, edges[i], edges[i + 1], abs_tol, 0.0, 64);
  quad::Result<double> out;
  for (const auto& r : parts) {
    out.value += r.value;
    out.error += r.error;
    out.l1 += r.l1;
    out.evaluations += r.evaluations;
    out.converged = out.converged && r.converged;
  }
  return out;
}

struct Geometry {
  double k_min, k_sum, width, r0;
  long panels;
};

Geometry geometry(const Prepared& p, const OracleOptions& o, double radius_scale = 1.0) {
  Geometry g{};
  g.k_min = std::numeric_limits<double>::infinity();
  for (const auto& f : p.factors) {
    g.k_min = std::min(g.k_min, f.k);
    g.k_sum += f.k;
  }
  const double short_period = 2.0 * std::numbers::pi / g.k_sum;
  const double r0 = o.radius_periods * 2.0 * std::numbers::pi / g.k_min;
  g.panels = static_cast<long>(std::ceil(r0 / (o.panel_fraction * short_period)));
  if (g.panels * radius_scale > static_cast<double>(o.max_panels))
    throw NonConvergence("wavenumber ratio too large for the panel budget");
  g.panels = std::max(g.panels, 1L);
  g.width = r0 / static_cast<double>(g.panels);
  g.r0 = g.width * static_cast<double>(g.panels);
  return g;
}

std::vector<double> uniform_edges(double width, long count, long first = 0) {
  std::vector<double> e(static_cast<std::size_t>(count + 1));
  for (long i = 0; i <= count; ++i) e[i] = width * static_cast<double>(first + i);
  return e;
}

quad::Result<double> contour_tail(const Prepared& p, const Geometry& g, double abs_tol) {
  std::vector<Hankel> h;
  for (const auto& f : p.factors) h.emplace_back(f.order, f.k);
  const std::size_t n = h.size();
  const int exponent = p.power - static_cast<int>(n);
  const double zero_freq = 8.0 * kEps * g.k_sum;
  const std::size_t combos = std::size_t{1} << (n - 1);
  const double tol_each = abs_tol / static_cast<double>(combos);

  quad::Result<double> out;
  std::vector<int> sigma(n);
  for (std::size_t mask = 0; mask < combos; ++mask) {
    // sigma_0 = +1; the mirrored combination is the complex conjugate.
    double omega = h[0].k;
    sigma[0] = 1;
    for (std::size_t i = 1; i < n; ++i) {
      sigma[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
      omega += sigma[i] * h[i].k;
    }
    quad::Result<cplx> part;
    if (std::abs(omega) <= zero_freq) {
      if (exponent >= -1)
        throw NonConvergence("non-oscillatory 1/r tail: the integral does not converge at these momenta");
      // r = R0/s maps [R0, inf) onto (0, 1]; the integrand is polynomial in s.
      auto f = [&](double s) -> cplx {
        const double r = g.r0 / s;
        return slow_part(p, h, sigma, cplx(r, 0.0)) * (g.r0 / (s * s));
      };
      part = quad::integrate_adaptive(f, 0.0, 1.0, tol_each, 0.0, 200);
    } else {
      const double s = omega > 0 ? 1.0 : -1.0;
      const double a = std::abs(omega);
      const double t_max = 45.0 / a;
      auto f = [&](double t) -> cplx {
        return std::exp(-a * t) * slow_part(p, h, sigma, cplx(g.r0, s * t));
      };
      // Geometric pieces resolve both the 1/|omega| decay and the R0 scale.
      double lo = 0.0, hi = std::min(t_max, std::min(g.r0, 1.0 / a)) / 8.0;
      while (lo < t_max) {
        const auto piece = quad::integrate_adaptive(f, lo, hi, tol_each / 32.0, 0.0, 400);
        part.value += piece.value;
        part.error += piece.error;
        part.l1 += piece.l1;
        part.evaluations += piece.evaluations;
        part.converged = part.converged && piece.converged;
        lo = hi;
        hi = std::min(2.0 * hi, t_max);
      }
      part.value *= cplx(0.0, s) * std::exp(cplx(0.0, omega * g.r0));
    }
    out.value += 2.0 * part.value.real();
    out.error += 2.0 * part.error;
    out.l1 += 2.0 * part.l1;
    out.evaluations += part.evaluations;
    out.converged = out.converged && part.converged;
  }
  return out;
}

// 1 on s <= 1, 0 on s >= 2, infinitely smooth in between.
double window(double s) {
  if (s <= 1.0) return 1.0;
  if (s >= 2.0) return 0.0;
  const double t = s - 1.0;
  const double a = std::exp(-1.0 / (1.0 - t));
  const double b = std::exp(-1.0 / t);
  return a / (a + b);
}

quad::Result<double> windowed_integral(const Prepared& p, const Geometry& g, const OracleOptions& o, double abs_tol) {
  const int levels = std::max(o.richardson_levels, 2);
  const long base = g.panels;
  const long top = base << levels;  // panels up to 2 R_{levels-1}
  if (static_cast<double>(top) > static_cast<double>(o.max_panels))
    throw NonConvergence("windowed tail exceeds the panel budget");

  auto f = [&](double r) { return integrand(p, r); };
  std::vector<double> v(static_cast<std::size_t>(levels)), x(static_cast<std::size_t>(levels));
  quad::Result<double> acc;
  const auto head = panel_sum(f, uniform_edges(g.width, base), abs_tol / 4.0, o.parallel);
  double cumulative = head.value;
  acc.error = head.error;
  acc.evaluations = head.evaluations;
  acc.l1 = head.l1;
  for (int j = 0; j < levels; ++j) {
    const long start = base << j;
    const double rj = g.width * static_cast<double>(start);
    auto tapered = [&](double r) { return integrand(p, r) * window(r / rj); };
    const auto taper = panel_sum(tapered, uniform_edges(g.width, start, start), abs_tol / 4.0, o.parallel);
    v[j] = cumulative + taper.value;
    x[j] = 1.0 / rj;
    acc.error += taper.error;
    acc.evaluations += taper.evaluations;
    if (j + 1 < levels) {
      // extend the plain integral from R_j to R_{j+1}
      const auto more = panel_sum(f, uniform_edges(g.width, start, start), abs_tol / 4.0, o.parallel);
      cumulative += more.value;
      acc.error += more.error;
      acc.evaluations += more.evaluations;
    }
  }
  // Neville extrapolation to 1/R = 0, with the previous order as the error proxy.
  const auto neville = [](std::vector<double> t, const std::vector<double>& xs) {
    const auto n = t.size();
    for (std::size_t m = 1; m < n; ++m)
      for (std::size_t i = n - 1; i >= m; --i) t[i] = (xs[i - m] * t[i] - xs[i] * t[i - 1]) / (xs[i - m] - xs[i]);
    return t.back();
  };
  acc.value = neville(v, x);
  const double previous = neville(std::vector<double>(v.begin() + 1, v.end()), std::vector<double>(x.begin() + 1, x.end()));
  acc.error += std::abs(acc.value - previous);
  return acc;
}

}  // namespace

quad::Result<double> integrate_oscillatory(const OscillatoryIntegralSpec& spec) {
  const Prepared p = prepare(spec);
  quad::Result<double> out;
  if (p.vanishes) return out;
  const auto& o = spec.options;
  if (p.factors.empty()) throw ConvergenceDomain("no Bessel factor carries a non-zero wavenumber");

  const double abs_tol = 0.1 * spec.tol;
  if (o.tail == TailMethod::windowed) {
    const Geometry g = geometry(p, o, std::ldexp(1.0, std::max(o.richardson_levels, 2)));
    out = windowed_integral(p, g, o, abs_tol);
  } else {
    const Geometry g = geometry(p, o);
    auto f = [&](double r) { return integrand(p, r); };
    const auto head = panel_sum(f, uniform_edges(g.width, g.panels), abs_tol / static_cast<double>(g.panels), o.parallel);
    const auto tail = contour_tail(p, g, abs_tol);
    out.value = head.value + tail.value;
    out.error = head.error + tail.error;
    out.l1 = head.l1 + tail.l1;
    out.evaluations = head.evaluations + tail.evaluations;
  }
  out.error += 64.0 * kEps * out.l1;
  out.converged = out.error <= spec.tol * std::max(1.0, std::abs(out.value));
  if (!out.converged)
    throw NonConvergence("oscillatory quadrature did not reach the requested tolerance (error " +
                         std::to_string(out.error) + ")");
  return out;
}

IntegralResult oracle_triple(const AngularIndices& ang, double k1, double k2, double k3, double tol,
                             const OracleOptions& options) {
  if (tol < 1e-10) throw InvalidArgument("oracle tolerance must be >= 1e-10");
  if (ang.l1 < 0 || ang.l2 < 0 || ang.l3 < 0) throw InvalidArgument("negative Bessel order");
  if (ang.lambda < 0) throw ConvergenceDomain("lambda < 0: the integral diverges at the origin");
  const auto kin = TriangleKinematics::make(k1, k2, k3);
  OscillatoryIntegralSpec spec;
  spec.power = 2 - ang.lambda;
  spec.factors = {{ang.l1, k1}, {ang.l2, k2}, {ang.l3 + ang.lambda, k3}};
  spec.tol = tol;
  spec.options = options;
  const auto q = integrate_oscillatory(spec);
  IntegralResult r;
  r.value = q.value;
  r.error_estimate = q.error;
  r.method = Method::oracle;
  r.kinematic_class = kin.kinematic_class;
  r.formula = formula::oracle;
  r.outside_closed_form_scope = !ang.even_parity();
  return r;
}

IntegralResult oracle_quadruple(int L, int N, int M, double k1, double k2, double k3, double k4, double tol,
                                const OracleOptions& options) {
  if (tol < 1e-10) throw InvalidArgument("oracle tolerance must be >= 1e-10");
  if (L < 0 || N < 0 || M < 0) throw InvalidArgument("L, N, M must be non-negative");
  if (N + M < L) throw InvalidArgument("N + M must be >= L");
  for (double k : {k1, k2, k3, k4})
    if (!(k > 0.0) || !std::isfinite(k)) throw InvalidArgument("momenta must be positive and finite");
  OscillatoryIntegralSpec spec;
  spec.power = 2 - L;
  spec.factors = {{N + M - L, k1}, {0, k2}, {N, k3}, {M, k4}};
  spec.tol = tol;
  spec.options = options;
  const auto q = integrate_oscillatory(spec);
  IntegralResult r;
  r.value = q.value;
  r.error_estimate = q.error;
  r.method = Method::oracle;
  const double lo = std::max(std::abs(k1 - k2), std::abs(k3 - k4));
  const double hi = std::min(k1 + k2, k3 + k4);
  r.kinematic_class = lo < hi ? KinematicClass::interior : lo == hi ? KinematicClass::boundary : KinematicClass::exterior;
  r.formula = formula::four_oracle;
  return r;
}

}  // namespace tribessel
