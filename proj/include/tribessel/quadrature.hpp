#pragma once

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <type_traits>
#include <vector>

namespace tribessel::quad {

template <typename V>
struct Result {
  V value{};
  double error = 0.0;
  /// Integral of |f|, the scale for roundoff-limited tolerances.
  double l1 = 0.0;
  long evaluations = 0;
  bool converged = true;
};

/// Gauss-Kronrod 10/21 on one panel; the error is |K21 - G10|.
template <typename F>
auto gauss_kronrod_panel(F&& f, double a, double b) -> Result<std::decay_t<decltype(f(a))>> {
  using V = std::decay_t<decltype(f(a))>;
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
  using Gauss = boost::math::quadrature::gauss<double, 10>;
  const auto& x = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);

  const V f0 = f(mid);
  V kronrod = f0 * wk[0];
  V gauss{};
  double l1 = std::abs(f0) * wk[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const V fp = f(mid + half * x[i]);
    const V fm = f(mid - half * x[i]);
    kronrod += (fp + fm) * wk[i];
    l1 += (std::abs(fp) + std::abs(fm)) * wk[i];
    if (i % 2 == 1) gauss += (fp + fm) * wg[i / 2];
  }
  Result<V> r;
  r.value = kronrod * half;
  r.l1 = l1 * std::abs(half);
  r.error = std::max(std::abs((kronrod - gauss) * half), 2.0 * std::numeric_limits<double>::epsilon() * r.l1);
  r.evaluations = 21;
  return r;
}

/// Globally adaptive bisection (largest error first) until
/// error <= max(abs_tol, rel_tol |value|) or max_panels is reached.
///
/// Panels are summed left to right at the end, so the result does not depend
/// on the order in which they were refined.
template <typename F>
auto integrate_adaptive(F&& f, double a, double b, double abs_tol, double rel_tol, int max_panels = 4000)
    -> Result<std::decay_t<decltype(f(a))>> {
  using V = std::decay_t<decltype(f(a))>;
  struct Panel {
    double a, b;
    Result<V> r;
  };
  auto cmp = [](const Panel& p, const Panel& q) { return p.r.error < q.r.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> work(cmp);

  Panel first{a, b, gauss_kronrod_panel(f, a, b)};
  long evaluations = first.r.evaluations;
  double error = first.r.error;
  double l1 = first.r.l1;
  V value = first.r.value;
  // Below ~eps * integral(|f|) further bisection only chases roundoff.
  const auto target = [&] {
    return std::max({abs_tol, rel_tol * std::abs(value), 64.0 * std::numeric_limits<double>::epsilon() * l1});
  };
  work.push(std::move(first));
  int panels = 1;
  while (error > target() && panels < max_panels) {
    Panel worst = work.top();
    work.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (m <= worst.a || m >= worst.b) {
      work.push(std::move(worst));
      break;
    }
    Panel left{worst.a, m, gauss_kronrod_panel(f, worst.a, m)};
    Panel right{m, worst.b, gauss_kronrod_panel(f, m, worst.b)};
    evaluations += left.r.evaluations + right.r.evaluations;
    error += left.r.error + right.r.error - worst.r.error;
    value += left.r.value + right.r.value - worst.r.value;
    l1 += left.r.l1 + right.r.l1 - worst.r.l1;
    work.push(std::move(left));
    work.push(std::move(right));
    ++panels;
  }

  std::vector<Panel> done;
  done.reserve(work.size());
  while (!work.empty()) {
    done.push_back(work.top());
    work.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& p, const Panel& q) { return p.a < q.a; });
  Result<V> out;
  for (const auto& p : done) {
    out.value += p.r.value;
    out.error += p.r.error;
    out.l1 += p.r.l1;
  }
  out.evaluations = evaluations;
  out.converged = out.error <= std::max({abs_tol, rel_tol * std::abs(out.value),
                                         64.0 * std::numeric_limits<double>::epsilon() * out.l1});
  return out;
}

}  // namespace tribessel::quad
