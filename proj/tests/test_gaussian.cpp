#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "sparsepd/gaussian.hpp"

using namespace sparsepd;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("normal_pdf basics") {
  CHECK(normal_pdf(0, 0, 1) == doctest::Approx(0.3989422804014327).epsilon(1e-14));
  // value at the mean is (2 pi v)^{-1/2}
  for (double v : {1e-3, 0.25, 1.0, 7.5, 1e3}) {
    CHECK(normal_pdf(3.2, 3.2, v) ==
          doctest::Approx(1.0 / std::sqrt(2 * M_PI * v)).epsilon(1e-14));
  }
  CHECK(normal_pdf(1.96, 0, 1) ==
        doctest::Approx(0.058440944333451476).epsilon(1e-14));
  CHECK_THROWS_AS(normal_pdf(0, 0, 0), std::domain_error);
  CHECK_THROWS_AS(normal_pdf(0, 0, -1), std::domain_error);
  CHECK(std::exp(log_normal_pdf(1.3, 0.2, 2.5)) ==
        doctest::Approx(normal_pdf(1.3, 0.2, 2.5)).epsilon(1e-13));
}

TEST_CASE("upper_tail") {
  CHECK(upper_tail(0) == 0.5);
  CHECK(upper_tail(1.96) == doctest::Approx(0.024997895148220435).epsilon(1e-13));
  for (double x = -8; x <= 8; x += 0.37)
    CHECK(upper_tail(x) + upper_tail(-x) == doctest::Approx(1.0).epsilon(1e-14));
  // Mills ratio bound
  for (double x = 0.5; x <= 40; x += 0.7)
    CHECK(upper_tail(x) <= normal_pdf(x, 0, 1) / x);
  // never underflows to exactly 0 for x <= 38
  CHECK(upper_tail(38.0) > 0.0);
  CHECK(upper_tail(30.0) > 0.0);
  CHECK(log_upper_tail(6.0) == doctest::Approx(std::log(upper_tail(6.0))).epsilon(1e-12));
  CHECK(log_upper_tail(35.0) < log_upper_tail(30.0));
}

TEST_CASE("truncated_second_moment") {
  auto tm0 = truncated_second_moment(0, 0);
  CHECK(tm0.mass == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(tm0.moment == doctest::Approx(1.0).epsilon(1e-14));

  const double lam = 1.5;
  auto tm = truncated_second_moment(0, lam);
  CHECK(tm.moment ==
        doctest::Approx(2 * (lam * normal_pdf(lam, 0, 1) + upper_tail(lam)))
            .epsilon(1e-14));
  CHECK(truncated_second_moment(0, 1.96).moment ==
        doctest::Approx(0.27908429208357066).epsilon(1e-12));
  // mass + P(|X| <= lambda) = 1
  for (double theta : {-1.2, 0.0, 2.7}) {
    auto t = truncated_second_moment(theta, 2.0);
    const double inside =
        (1 - upper_tail(2.0 - theta)) - upper_tail(2.0 + theta);
    CHECK(t.mass + inside == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(truncated_second_moment(0, -0.5), std::domain_error);
}

TEST_CASE("hermite_rule") {
  CHECK_THROWS_AS(hermite_rule(1), std::domain_error);
  CHECK_THROWS_AS(hermite_rule(257), std::domain_error);

  const auto& two = hermite_rule(2);
  CHECK(two.nodes[0] == doctest::Approx(-1 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(two.nodes[1] == doctest::Approx(+1 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(two.weights[0] == doctest::Approx(kSqrtPi / 2).epsilon(1e-14));
  CHECK(two.weights[1] == doctest::Approx(kSqrtPi / 2).epsilon(1e-14));

  for (int n : {2, 7, 32, 96, 256}) {
    const auto& rule = hermite_rule(n);
    double w_sum = 0, t2 = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      w_sum += rule.weights[i];
      t2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    }
    CHECK(w_sum == doctest::Approx(kSqrtPi).epsilon(1e-12));
    CHECK(t2 == doctest::Approx(kSqrtPi / 2).epsilon(1e-12));
  }
  // cached: same object returned
  CHECK(&hermite_rule(48) == &hermite_rule(48));
}

TEST_CASE("legendre_rule") {
  CHECK_THROWS_AS(legendre_rule(16, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(legendre_rule(16, 2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(legendre_rule(1, 0.0, 1.0), std::domain_error);

  auto unit = legendre_rule(12, 0, 1);
  double sum = 0;
  for (double w : unit.weights) sum += w;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));

  // (16, v_w, 1) applied to 1/v^2 equals 1/v_w - 1 = 1/r
  const double r = 0.25, v_w = 1 / (1 + 1 / r);
  auto rule = legendre_rule(16, v_w, 1.0);
  double inv = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    inv += rule.weights[i] / (rule.nodes[i] * rule.nodes[i]);
  CHECK(inv == doctest::Approx(1.0 / r).epsilon(1e-10));

  auto cubic = legendre_rule(16, 0, 2);
  double c = 0;
  for (std::size_t i = 0; i < cubic.nodes.size(); ++i)
    c += cubic.weights[i] * std::pow(cubic.nodes[i], 3);
  CHECK(c == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("adaptive integrate") {
  CHECK(integrate([](double x) { return x * x * x; }, 0, 1, 1e-12) ==
        doctest::Approx(0.25).epsilon(1e-12));
  // sharply peaked integrand
  const double eps = 1e-4;
  const double val = integrate([&](double x) { return 1.0 / (eps + x * x); },
                               -1, 1, 1e-10);
  const double exact = 2.0 / std::sqrt(eps) * std::atan(1.0 / std::sqrt(eps));
  CHECK(val == doctest::Approx(exact).epsilon(1e-9));
  CHECK(integrate([](double) { return 1.0; }, 2, 2, 1e-12) == 0.0);
}

TEST_CASE("gauss_expectation") {
  CHECK(gauss_expectation([](double x) { return x * x; }, 0, 1) ==
        doctest::Approx(1.0).epsilon(1e-11));
  const double m = 1.7, sd = 2.2;
  CHECK(gauss_expectation([&](double x) { return std::pow(x - m, 4); }, m, sd) ==
        doctest::Approx(3 * std::pow(sd, 4)).epsilon(1e-11));
  // discontinuous integrand handled through split points
  const double lam = 0.8;
  const double p = gauss_expectation(
      [&](double x) { return std::abs(x) > lam ? 1.0 : 0.0; }, 0, 1,
      {-lam, lam});
  CHECK(p == doctest::Approx(2 * upper_tail(lam)).epsilon(1e-11));
}

TEST_CASE("QuadratureSpec validation") {
  QuadratureSpec ok;
  CHECK_NOTHROW(ok.validate());
  QuadratureSpec bad_h{1, 64, {}};
  CHECK_THROWS_AS(bad_h.validate(), std::invalid_argument);
  QuadratureSpec bad_l{96, 1, {}};
  CHECK_THROWS_AS(bad_l.validate(), std::invalid_argument);
  QuadratureSpec bad_split{96, 64, {1.0, 1.0}};
  CHECK_THROWS_AS(bad_split.validate(), std::invalid_argument);
}
