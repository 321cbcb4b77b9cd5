#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tribessel/error.hpp"
#include "tribessel/explicit_table.hpp"
#include "tribessel/oracle.hpp"
#include "tribessel/sweep.hpp"
#include "tribessel/triple.hpp"
#include "tribessel/verify.hpp"
#include "tribessel/wigner.hpp"

using namespace tribessel;
using std::numbers::pi;

namespace {

TriangleKinematics tk(double a, double b, double c) { return TriangleKinematics::make(a, b, c); }

double master(int lambda, int l1, int l2, int l3, double k1, double k2, double k3) {
  return eval_master({lambda, l1, l2, l3}, tk(k1, k2, k3)).value;
}

TripleJob job(AngularIndices ang, double k1, double k2, double k3, TripleMethod m = TripleMethod::automatic) {
  TripleJob j;
  j.ang = ang;
  j.k1 = k1;
  j.k2 = k2;
  j.k3 = k3;
  j.method = m;
  return j;
}

}  // namespace

TEST_SUITE("triple") {
  TEST_CASE("kinematics") {
    const auto k = tk(1, 1, 1);
    CHECK(k.delta == doctest::Approx(0.5));
    CHECK(k.beta == 1.0);
    CHECK(k.kinematic_class == KinematicClass::interior);
    CHECK(tk(1, 1, 2).beta == 0.5);
    CHECK(tk(1, 1, 2).kinematic_class == KinematicClass::boundary);
    CHECK(tk(1, 1, 5).beta == 0.0);
    CHECK((tk(2, 1, 1.5).c1 >= 0 && tk(2, 1, 1.5).c2 >= 0 && tk(2, 1, 1.5).c3 >= 0));
    CHECK_THROWS_AS(tk(0, 1, 1), InvalidArgument);
    CHECK(AngularIndices{0, 1, 1, 2}.master_evaluable());
    CHECK_FALSE(AngularIndices{0, 1, 1, 1}.master_evaluable());
    CHECK_FALSE(AngularIndices{0, 1, 1, 4}.master_evaluable());
  }

  TEST_CASE("master examples") {
    CHECK(master(0, 0, 0, 0, 1, 1, 1) == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK(master(0, 1, 1, 0, 1, 1, 1) == doctest::Approx(pi / 8).epsilon(1e-15));
    CHECK(master(1, 0, 0, 0, 1, 1, 1) == doctest::Approx(pi / 8).epsilon(1e-15));
    const double v = master(2, 1, 1, 0, 1, 1, 1);
    CHECK(v == doctest::Approx(oracle_triple({2, 1, 1, 0}, 1, 1, 1).value).epsilon(1e-8));
    CHECK(v == doctest::Approx(explicit_table({2, 1, 1, 0}).value(tk(1, 1, 1))).epsilon(1e-14));
  }

  TEST_CASE("master errors and exterior momenta") {
    CHECK_THROWS_AS(eval_master({0, 1, 1, 1}, tk(1, 1, 1)), ParityViolation);
    CHECK_THROWS_AS(eval_master({0, 1, 1, 4}, tk(1, 1, 1)), DomainError);
    CHECK_THROWS_AS(eval_master({-1, 0, 0, 0}, tk(1, 1, 1)), ConvergenceDomain);
    CHECK(eval_master({0, 2, 1, 1}, tk(1, 1, 5)).value == 0.0);
    CHECK_THROWS_AS(eval_master({2, 1, 1, 0}, tk(1, 1, 5)), OutsideDerivationDomain);
  }

  TEST_CASE("degenerate triangle takes the half-maximum value") {
    // Continuous limit of beta * (product form) times 1/2.
    const double edge = master(0, 1, 1, 0, 1, 1, 2);
    const double inside = master(0, 1, 1, 0, 1, 1, 2 - 1e-9);
    CHECK(edge == doctest::Approx(inside / 2).epsilon(1e-7));
    CHECK(std::isfinite(master(2, 2, 2, 0, 1, 1, 2)));
  }

  TEST_CASE("master agrees with the Gervois sum and reports an honest error bound") {
    for (int lambda = 0; lambda <= 3; ++lambda)
      for (int l1 = 0; l1 <= 3; ++l1)
        for (int l2 = 0; l2 <= 3; ++l2)
          for (int l3 = std::abs(l1 - l2); l3 <= l1 + l2; l3 += 2)
            for (auto k : {std::array{1.3, 0.9, 1.7}, std::array{2.0, 1.95, 0.08}, std::array{0.6, 1.1, 0.62}}) {
              const auto m = eval_master({lambda, l1, l2, l3}, tk(k[0], k[1], k[2]));
              const auto g = eval_gervois({lambda, l1, l2, l3}, tk(k[0], k[1], k[2]));
              CHECK(std::abs(m.value - g.value) <= m.error_estimate + g.error_estimate);
            }
  }

  TEST_CASE("lambda = 1 everywhere") {
    CHECK(eval_lambda1_general(0, 0, 0, 1, 1, 1).value == doctest::Approx(master(1, 0, 0, 0, 1, 1, 1)).epsilon(1e-15));
    // K > k1 + k2: only the second term; it carries the 3j divisor of the left-hand side.
    const double v = eval_lambda1_general(1, 1, 2, 1, 1, 3).value;
    const double second = std::pow(-1.0, 2) * pi / 2 / std::pow(3.0, 4) * std::sqrt(5.0) / 9 * std::sqrt(6.0);
    CHECK(three_j0(1, 1, 2).to_double() * v == doctest::Approx(second).epsilon(1e-14));
    CHECK(v == doctest::Approx(gradshteyn_value(1, 1, 2, 1, 1, 3)).epsilon(1e-14));
    CHECK(v == doctest::Approx(oracle_triple({1, 1, 1, 2}, 1, 1, 3).value).epsilon(1e-8));
    // No second term when l3 < l1 + l2; exterior then vanishes.
    CHECK(eval_lambda1_general(1, 1, 0, 1, 1, 3).value == 0.0);
    CHECK(oracle_triple({1, 1, 1, 0}, 1, 1, 3).value == doctest::Approx(0.0).scale(1.0).epsilon(1e-8));
    CHECK(eval_lambda1_general(2, 0, 2, 0.7, 1.1, 2.5).value ==
          doctest::Approx(oracle_triple({1, 2, 0, 2}, 0.7, 1.1, 2.5).value).epsilon(1e-8));
    // Boundary K = k1 + k2: both halves.
    CHECK(eval_lambda1_general(1, 1, 2, 1, 1, 2).value ==
          doctest::Approx((eval_lambda1_general(1, 1, 2, 1, 1, 2 - 1e-9).value +
                           eval_lambda1_general(1, 1, 2, 1, 1, 2 + 1e-9).value) / 2).epsilon(1e-7));
  }

  TEST_CASE("special case") {
    CHECK(eval_special_case(0, 0, tk(1, 1, 1)).value == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK(eval_special_case(1, 0, tk(1, 1, 1)).value == doctest::Approx(master(1, 0, 0, 0, 1, 1, 1)).epsilon(1e-15));
    CHECK(eval_special_case(2, 1, tk(2, 2, 3)).value == doctest::Approx(master(2, 1, 1, 0, 2, 2, 3)).epsilon(1e-14));
    for (int lambda = 0; lambda <= 3; ++lambda)
      for (int lp = 0; lp <= 4; ++lp)
        CHECK(eval_special_case(lambda, lp, tk(1.2, 0.8, 1.5)).value ==
              doctest::Approx(master(lambda, lp, lp, 0, 1.2, 0.8, 1.5)).epsilon(1e-13));
  }

  TEST_CASE("sum rule") {
    for (double k : {0.7, 1.3}) CHECK(sum_rule_check(0, k, 1.0, 1.1));
    CHECK(sum_rule_check(3, 3, 2, 2));
    CHECK(sum_rule_check(6, 1.5, 2.5, 3.0));
    // Thin triangles, where the alternating left side is badly conditioned.
    CHECK(sum_rule_check(6, 1.7, 1.69, 0.05));
    CHECK_THROWS_AS(sum_rule_check(-1, 1, 1, 1), InvalidArgument);
  }

  TEST_CASE("printed table coefficients") {
    CHECK(explicit_table_indices().size() == 9);
    CHECK(printed_explicit_indices().size() == 6);
    const Rational k1(3, 2), k2(5, 4), d(1, 3);
    CHECK((explicit_table({0, 0, 0, 0}).a_value(k1, k2, d) == 1));
    CHECK((explicit_table({1, 1, 1, 0}).a_value(k1, k2, d) == Rational(6 * k1 * k1 * k2 * k2 * (d + 1) * (1 - d))));
    CHECK((explicit_table({2, 1, 0, 1}).a_value(k1, k2, d) ==
         Rational(-16 * (d - 1) * (d - 1) * (-3 * k1 + 2 * k2 + k2 * d) * k2 * k2 * k1 * k1 * k1)));
    CHECK_THROWS_AS(explicit_table({3, 0, 0, 0}), NotInTable);
    CHECK(printed_explicit_value({0, 0, 0, 0}, tk(1, 1, 1)) == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK(printed_explicit_value({0, 1, 0, 1}, tk(2, 1, 2)) == doctest::Approx(master(0, 1, 0, 1, 2, 1, 2)).epsilon(1e-14));
    for (const auto& ang : explicit_table_indices())
      CHECK(explicit_table(ang).value(tk(1.1, 0.9, 1.4)) ==
            doctest::Approx(evaluate_analytic(ang, tk(1.1, 0.9, 1.4)).value).epsilon(1e-13));
  }

  TEST_CASE("permutation symmetry at lambda = 0") {
    const double v = master(0, 2, 3, 1, 1.2, 0.9, 1.6);
    CHECK(master(0, 3, 2, 1, 0.9, 1.2, 1.6) == doctest::Approx(v).epsilon(1e-14));
    CHECK(master(0, 1, 3, 2, 1.6, 0.9, 1.2) == doctest::Approx(v).epsilon(1e-14));
  }

  TEST_CASE("Gervois sum needs triangle momenta") {
    CHECK_THROWS_AS(eval_gervois({0, 0, 0, 0}, tk(1, 1, 5)), OutsideDerivationDomain);
    CHECK_THROWS_AS(eval_gervois({0, 1, 0, 0}, tk(1, 1, 1)), ParityViolation);
  }

  TEST_CASE("coupling coefficients are cached and exact") {
    const auto a = coupling_coefficients(2, 2, 2);
    CHECK(a == coupling_coefficients(2, 2, 2));
    for (const auto& t : a->terms) CHECK(t.value == doctest::Approx(t.exact.to_double()).epsilon(1e-15));
  }

  TEST_CASE("serial and parallel sweeps are bit-identical") {
    std::vector<TripleJob> jobs;
    for (int lambda = 0; lambda <= 2; ++lambda)
      for (int l = 0; l <= 3; ++l)
        for (double k3 : {0.4, 1.0, 1.7, 5.0}) jobs.push_back(job({lambda, l, l, 0}, 1.0, 0.9, k3));
    jobs.push_back(job({0, 1, 1, 1}, 1, 1, 1));
    jobs.push_back(job({1, 0, 0, 0}, 1, 1, 1, TripleMethod::oracle));
    const auto s = sweep_triple(jobs, Execution::serial), p = sweep_triple(jobs, Execution::parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].status == p[i].status);
      if (s[i].result) CHECK(s[i].result->value == p[i].result->value);
    }
    CHECK(s[jobs.size() - 2].status == Status::domain_error);
  }
}
