#include "tribessel/wigner.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "tribessel/error.hpp"

namespace tribessel {

namespace {

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

// Triangle coefficient (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)! as exponents.
void add_delta(PrimePowers& acc, const FactorialTable& t, int a, int b, int c) {
  add_to(acc, t.powers(static_cast<unsigned>(a + b - c)));
  add_to(acc, t.powers(static_cast<unsigned>(a - b + c)));
  add_to(acc, t.powers(static_cast<unsigned>(-a + b + c)));
  add_to(acc, t.powers(static_cast<unsigned>(a + b + c + 1)), -1);
}

}  // namespace

bool triangle(int a, int b, int c) { return c >= std::abs(a - b) && c <= a + b; }

bool ThreeJQuery::triangle() const { return tribessel::triangle(j1, j2, j3); }

bool ThreeJQuery::selection_rules() const {
  return m1 + m2 + m3 == 0 && triangle() && std::abs(m1) <= j1 && std::abs(m2) <= j2 &&
         std::abs(m3) <= j3;
}

bool SixJQuery::triangles() const {
  return triangle(a, b, c) && triangle(a, e, f) && triangle(d, b, f) && triangle(d, e, c);
}

RadicalRational three_j(const ThreeJQuery& q, const FactorialTable& t) {
  const auto [j1, j2, j3, m1, m2, m3] = q;
  if (j1 < 0 || j2 < 0 || j3 < 0) throw InvalidArgument("three_j: negative angular momentum");
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m3) > j3)
    throw InvalidArgument("three_j: |m| exceeds j");
  if (!q.selection_rules()) return {};
  if (m1 == 0 && m2 == 0 && m3 == 0 && (j1 + j2 + j3) % 2 != 0) return {};

  PrimePowers radicand = t.zero();
  add_delta(radicand, t, j1, j2, j3);
  for (int v : {j1 + m1, j1 - m1, j2 + m2, j2 - m2, j3 + m3, j3 - m3})
    add_to(radicand, t.powers(static_cast<unsigned>(v)));

  const int kmin = std::max({0, j2 - j3 - m1, j1 - j3 + m2});
  const int kmax = std::min({j1 + j2 - j3, j1 - m1, j2 + m2});
  std::vector<std::pair<int, PrimePowers>> terms;
  for (int k = kmin; k <= kmax; ++k) {
    PrimePowers e = t.zero();
    for (int v : {k, j3 - j2 + k + m1, j3 - j1 + k - m2, j1 + j2 - j3 - k, j1 - k - m1, j2 - k + m2})
      add_to(e, t.powers(static_cast<unsigned>(v)), -1);
    terms.emplace_back(parity_sign(k), std::move(e));
  }
  const Rational sum = t.signed_sum(terms);
  const int phase = parity_sign(std::abs(j1 - j2 - m3));
  return RadicalRational(phase * sgn(sum), Rational(sum * sum * t.to_rational(radicand)));
}

RadicalRational three_j0(int j1, int j2, int j3, const FactorialTable& t) {
  return three_j({j1, j2, j3, 0, 0, 0}, t);
}

RadicalRational six_j(const SixJQuery& q, const FactorialTable& t) {
  const auto [a, b, c, d, e, f] = q;
  if (a < 0 || b < 0 || c < 0 || d < 0 || e < 0 || f < 0)
    throw InvalidArgument("six_j: negative entry");
  if (!q.triangles()) return {};

  PrimePowers radicand = t.zero();
  add_delta(radicand, t, a, b, c);
  add_delta(radicand, t, a, e, f);
  add_delta(radicand, t, d, b, f);
  add_delta(radicand, t, d, e, c);

  const int tmin = std::max({a + b + c, a + e + f, d + b + f, d + e + c});
  const int tmax = std::min({a + b + d + e, a + c + d + f, b + c + e + f});
  std::vector<std::pair<int, PrimePowers>> terms;
  for (int s = tmin; s <= tmax; ++s) {
    PrimePowers ex = t.powers(static_cast<unsigned>(s + 1));
    for (int v : {s - a - b - c, s - a - e - f, s - d - b - f, s - d - e - c, a + b + d + e - s,
                  a + c + d + f - s, b + c + e + f - s})
      add_to(ex, t.powers(static_cast<unsigned>(v)), -1);
    terms.emplace_back(parity_sign(s), std::move(ex));
  }
  const Rational sum = t.signed_sum(terms);
  return RadicalRational(sgn(sum), Rational(sum * sum * t.to_rational(radicand)));
}

bool binomial_3j_identity_check(int l, int l_prime) {
  if (l_prime < 0 || l_prime > l) throw InvalidArgument("binomial_3j_identity_check: need 0 <= l' <= l");
  const auto ul = static_cast<unsigned>(l);
  const auto ulp = static_cast<unsigned>(l_prime);
  const RadicalRational lhs =
      RadicalRational::sqrt_of(Rational(binomial(2 * ul, 2 * ulp))) * three_j0(l, l - l_prime, l_prime);
  const Integer c = binomial(ul, ulp);
  const RadicalRational rhs(parity_sign(l), Rational(Rational(c * c) / (2 * l + 1)));
  return lhs == rhs;
}

}  // namespace tribessel
