#include "tribessel/explicit_table.hpp"

#include <array>
#include <map>
#include <numbers>

#include "tribessel/error.hpp"

namespace tribessel {

namespace {

using Key = std::array<int, 3>;  // powers of k1, k2, Delta
using Poly = std::map<Key, Rational>;

Poly constant(long c) { return {{Key{0, 0, 0}, Rational(c)}}; }
Poly term(long c, int p1, int p2, int pd) { return {{Key{p1, p2, pd}, Rational(c)}}; }

Poly operator+(Poly a, const Poly& b) {
  for (const auto& [k, v] : b) a[k] += v;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) out[Key{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}] += va * vb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

const Poly k1 = term(1, 1, 0, 0);
const Poly k2 = term(1, 0, 1, 0);
const Poly dl = term(1, 0, 0, 1);

TableEntry make_entry(int lambda, int l1, int l2, int l3, const Poly& a) {
  TableEntry e;
  e.indices = {lambda, l1, l2, l3};
  Integer two_pow = 1;
  two_pow <<= static_cast<unsigned>(lambda + 2);
  e.scale = make_rational(1, two_pow * factorial(static_cast<unsigned>(l1 + l2 + l3 + lambda)));
  e.e1 = -(l1 + 1);
  e.e2 = -(l2 + 1);
  e.e3 = -(l3 + lambda + 1);
  for (const auto& [k, v] : a) e.a.push_back({v, k[0], k[1], k[2]});
  return e;
}

const std::vector<TableEntry>& table() {
  static const std::vector<TableEntry> entries = [] {
    const Poly one_minus_d = constant(1) + term(-1, 0, 0, 1);
    const Poly d_minus_one_sq = (dl + constant(-1)) * (dl + constant(-1));
    std::vector<TableEntry> t;
    t.push_back(make_entry(0, 0, 0, 0, constant(1)));
    t.push_back(make_entry(0, 1, 0, 1, constant(-2) * k1 * (term(-1, 1, 0, 0) + k2 * dl)));
    t.push_back(make_entry(0, 1, 1, 0, constant(2) * k1 * k2 * dl));
    t.push_back(make_entry(1, 0, 0, 0, constant(2) * k1 * k2 * one_minus_d));
    t.push_back(make_entry(1, 1, 0, 1,
                           constant(-6) * k1 * k1 * k2 * (term(-2, 1, 0, 0) + k2 * dl + k2) * one_minus_d));
    t.push_back(make_entry(1, 1, 1, 0, constant(6) * k1 * k1 * k2 * k2 * (dl + constant(1)) * one_minus_d));
    t.push_back(make_entry(2, 0, 0, 0, constant(4) * d_minus_one_sq * k2 * k2 * k1 * k1));
    t.push_back(make_entry(2, 1, 0, 1,
                           constant(-16) * d_minus_one_sq * (term(-3, 1, 0, 0) + term(2, 0, 1, 0) + k2 * dl) *
                               k2 * k2 * k1 * k1 * k1));
    t.push_back(make_entry(2, 1, 1, 0,
                           constant(16) * d_minus_one_sq * (constant(2) + dl) * k2 * k2 * k2 * k1 * k1 * k1));
    return t;
  }();
  return entries;
}

bool same(const AngularIndices& a, const AngularIndices& b) {
  return a.lambda == b.lambda && a.l1 == b.l1 && a.l2 == b.l2 && a.l3 == b.l3;
}

Rational ipow(const Rational& x, int n) {
  Rational r = 1;
  const Rational b = n >= 0 ? x : Rational(1 / x);
  for (int i = 0; i < std::abs(n); ++i) r *= b;
  return r;
}

struct Momenta {
  Rational k1, k2, k3, c1, c2, c3;
};

Momenta exact_momenta(const TriangleKinematics& kin) {
  Momenta m{exact_rational(kin.k1), exact_rational(kin.k2), exact_rational(kin.k3), 0, 0, 0};
  m.c1 = -m.k1 + m.k2 + m.k3;
  m.c2 = m.k1 - m.k2 + m.k3;
  m.c3 = m.k1 + m.k2 - m.k3;
  return m;
}

// Each returns I / (pi beta) as printed.
Rational printed_000_0(const Momenta& m) { return Rational(1, 4) / (m.k1 * m.k2 * m.k3); }

Rational printed_101_0(const Momenta& m) {
  const auto& [k1, k2, k3, c1, c2, c3] = m;
  const Rational bracket = -2 * k1 * k3 + k1 * k1 + 2 * k1 * c1 - 2 * k1 * c2 - 2 * k1 * c3 + k3 * k3 -
                           2 * k3 * c1 - 2 * k3 * c2 + 2 * k3 * c3 - k2 * k2 + c1 * c1 + c2 * c2 + c3 * c3;
  return Rational(-1, 16) / (k1 * k1 * k2 * k3 * k3) * bracket;
}

Rational printed_110_0(const Momenta& m) {
  const auto& [k1, k2, k3, c1, c2, c3] = m;
  const Rational bracket = -2 * k1 * k2 + k1 * k1 + 2 * k1 * c1 - 2 * k1 * c2 - 2 * k1 * c3 + k2 * k2 -
                           2 * c1 * k2 + 2 * k2 * c2 - 2 * k2 * c3 - k3 * k3 + c1 * c1 + c2 * c2 + c3 * c3;
  return Rational(-1, 16) / (k1 * k1 * k2 * k2 * k3) * bracket;
}

Rational printed_000_1(const Momenta& m) {
  const auto& [k1, k2, k3, c1, c2, c3] = m;
  const Rational bracket = k3 * k3 - 2 * k3 * c1 - 2 * k3 * c2 + 2 * k3 * c3 - k1 * k1 - 2 * k1 * k2 - k2 * k2 +
                           c1 * c1 + c2 * c2 + c3 * c3;
  return Rational(-1, 16) / (k1 * k2 * k3 * k3) * bracket;
}

Rational printed_101_1(const Momenta& m) {
  const auto& [k1, k2, k3, c1, c2, c3] = m;
  const Rational c1s = c1 * c1, c2s = c2 * c2, c3s = c3 * c3;
  const Rational k1s = k1 * k1, k2s = k2 * k2, k3s = k3 * k3;
  const Rational bracket = 2 * k2s * k3s + 4 * k3s * c1s - 12 * k1 * c1s * k3 + c2s * c2s + 8 * k1 * k3s * c1 -
                           8 * k1 * k3s * c3 - 8 * k1 * k3s * c2 + 12 * k1 * k3 * c2s - 12 * k1 * k3 * c3s +
                           6 * k1s * k2s - 4 * k1 * c2s * c2 - 4 * k1 * c3s * c3 + 4 * k1 * c1s * c1 +
                           4 * k3 * c3s * c3 + 4 * k3s * c2s + 4 * k3s * c3s - 4 * k3 * c2s * c2 -
                           4 * k3 * c1s * c1 - 2 * k1s * k3s + 8 * k1s * k1 * k2 + c1s * c1s + c3s * c3s +
                           3 * k1s * k1s - k2s * k2s - k3s * k3s;
  return Rational(1, 64) / (k1s * k2 * k3s * k3) * bracket;
}

Rational printed_110_1(const Momenta& m) {
  const auto& [k1, k2, k3, c1, c2, c3] = m;
  const Rational c1s = c1 * c1, c2s = c2 * c2, c3s = c3 * c3;
  const Rational k1s = k1 * k1, k2s = k2 * k2, k3s = k3 * k3;
  const Rational bracket =
      -4 * k2 * c1s * c1 - 6 * k2s * k3s + 24 * k1 * k2 * k3 * c2 - 12 * k1 * c1s * k3 + c2s * c2s +
      12 * k1 * k3 * c2s - 12 * k1 * k3 * c3s - 12 * k1 * c1s * k2 - 12 * k2 * k3 * c2s + 12 * k2 * k3 * c1s -
      12 * k2 * k3 * c3s + 12 * k1 * k2 * c3s - 12 * k1 * k2 * c2s + 24 * k1 * k2 * k3 * c3 +
      24 * k1 * k2 * k3 * c1 - 4 * k2 * c3s * c3 - 6 * k1s * k2s - 4 * k1 * c2s * c2 - 4 * k1 * c3s * c3 +
      4 * k1 * c1s * c1 + 4 * k3 * c3s * c3 - 4 * k3 * c2s * c2 - 4 * k3 * c1s * c1 - 6 * k1s * k3s +
      4 * k2 * c2s * c2 + c1s * c1s + c3s * c3s + 3 * k1s * k1s + 3 * k2s * k2s + 3 * k3s * k3s;
  return Rational(1, 192) / (k1s * k2s * k3s) * bracket;
}

const std::array<AngularIndices, 6> kPrinted = {{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0},
                                                {1, 0, 0, 0}, {1, 1, 0, 1}, {1, 1, 1, 0}}};

const std::vector<AngularIndices>& table_index_list() {
  static const std::vector<AngularIndices> list = [] {
    std::vector<AngularIndices> v;
    for (const auto& e : table()) v.push_back(e.indices);
    return v;
  }();
  return list;
}

}  // namespace

Rational TableEntry::a_value(const Rational& x1, const Rational& x2, const Rational& delta) const {
  Rational sum = 0;
  for (const auto& t : a) sum += t.coefficient * ipow(x1, t.p1) * ipow(x2, t.p2) * ipow(delta, t.pd);
  return sum;
}

double TableEntry::value(const TriangleKinematics& kin) const {
  if (kin.beta == 0.0) return 0.0;
  const Rational x1 = exact_rational(kin.k1), x2 = exact_rational(kin.k2), x3 = exact_rational(kin.k3);
  const Rational delta = (x1 * x1 + x2 * x2 - x3 * x3) / (2 * x1 * x2);
  const Rational v = scale * ipow(x1, e1) * ipow(x2, e2) * ipow(x3, e3) * a_value(x1, x2, delta);
  return std::numbers::pi * kin.beta * to_double(v);
}

const TableEntry& explicit_table(const AngularIndices& ang) {
  for (const auto& e : table())
    if (same(e.indices, ang)) return e;
  throw NotInTable("A(" + std::to_string(ang.lambda) + ";" + std::to_string(ang.l1) + "," +
                   std::to_string(ang.l2) + "," + std::to_string(ang.l3) + ") is not in the printed table");
}

std::span<const AngularIndices> explicit_table_indices() { return table_index_list(); }

double printed_explicit_value(const AngularIndices& ang, const TriangleKinematics& kin) {
  Rational (*fn)(const Momenta&) = nullptr;
  if (same(ang, kPrinted[0])) fn = printed_000_0;
  if (same(ang, kPrinted[1])) fn = printed_101_0;
  if (same(ang, kPrinted[2])) fn = printed_110_0;
  if (same(ang, kPrinted[3])) fn = printed_000_1;
  if (same(ang, kPrinted[4])) fn = printed_101_1;
  if (same(ang, kPrinted[5])) fn = printed_110_1;
  if (!fn) throw NotInTable("no printed closed form for these indices");
  if (kin.beta == 0.0) return 0.0;
  return std::numbers::pi * kin.beta * to_double(fn(exact_momenta(kin)));
}

std::span<const AngularIndices> printed_explicit_indices() { return kPrinted; }

}  // namespace tribessel
