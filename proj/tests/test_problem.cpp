#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "sparsepd/problem.hpp"

using namespace sparsepd;

namespace {

// Independent oracle: bisection root of mu^2 + 2 a mu = lambda_e^2.
double overshoot_bisect(double a, double lambda_e) {
  double lo = 0.0, hi = lambda_e;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * mid + 2 * a * mid < lambda_e * lambda_e)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("build_problem at (0.25, 0.05)") {
  const auto p = build_problem(0.25, 0.05);
  CHECK(p.v_w == 1.0 / (1.0 + 1.0 / 0.25));
  CHECK(p.lambda_e == doctest::Approx(2.4267010442847881).epsilon(1e-12));
  CHECK(p.lambda_f == doctest::Approx(std::sqrt(p.v_w) * p.lambda_e).epsilon(1e-15));
  CHECK(p.a == doctest::Approx(0.4045090451991486).epsilon(1e-10));
  CHECK(p.mu_eta == doctest::Approx(2.0556749979124245).epsilon(1e-10));
  CHECK(p.nu_eta == doctest::Approx(0.9193258069957838).epsilon(1e-10));
  // overshoot residual
  CHECK(p.mu_eta * p.mu_eta + 2 * p.a * p.mu_eta ==
        doctest::Approx(p.lambda_e * p.lambda_e).epsilon(1e-10));
  CHECK(p.nu_eta < p.lambda_f);
  CHECK(p.lambda_f < p.lambda_e);
  // diffbound
  CHECK(p.lambda_f * p.lambda_f - p.nu_eta * p.nu_eta <=
        2 * p.a * std::sqrt(p.v_w) * p.lambda_f + 1e-10);
}

TEST_CASE("build_problem at (0.25, e^-20)") {
  const auto p = build_problem(0.25, std::exp(-20.0));
  CHECK(std::abs(p.lambda_e - std::sqrt(40.0)) < 1e-8);
  CHECK(std::abs(p.lambda_f - std::sqrt(8.0)) < 1e-8);
}

TEST_CASE("closed-form root matches bisection") {
  for (double r : {0.15, 0.25, 1.0, 4.0}) {
    // eta = 0.01 is admissible for every r here (eta_max(0.15) ~ 0.021)
    for (double eta : {0.01, 1e-4, 1e-10}) {
      const auto p = build_problem(r, eta);
      CHECK(p.mu_eta ==
            doctest::Approx(overshoot_bisect(p.a, p.lambda_e)).epsilon(1e-10));
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(build_problem(0.0, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(build_problem(-1.0, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(build_problem(0.25, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_problem(0.25, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_problem(0.25, 0.9), std::domain_error);
  CHECK_THROWS_WITH_AS(build_problem(0.25, 0.9),
                       doctest::Contains("insufficient sparsity"),
                       std::domain_error);
}

TEST_CASE("admissibility boundary") {
  const double r = 0.7;
  const double eta_max = max_admissible_eta(r);
  CHECK_NOTHROW(build_problem(r, eta_max * 0.999));
  CHECK_THROWS_AS(build_problem(r, eta_max * 1.001), std::domain_error);
}

TEST_CASE("multivariate_problem") {
  const auto p = multivariate_problem(0.25, 400, 20);
  const auto q = build_problem(0.25, 0.05);
  CHECK(p.eta == 0.05);
  CHECK(p.lambda_e == q.lambda_e);
  CHECK(p.n == 400);
  CHECK(p.s == 20);

  const auto big = multivariate_problem(1.0, 1000000, 1);
  CHECK(big.lambda_e == doctest::Approx(5.256521579516967).epsilon(1e-12));

  CHECK_THROWS_AS(multivariate_problem(0.25, 10, 9), std::domain_error);
  CHECK_THROWS_AS(multivariate_problem(0.25, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(multivariate_problem(0.25, 10, 11), std::invalid_argument);
}

TEST_CASE("monotonicity and asymptotic ratios in eta") {
  const double r = 1.0;
  double prev_le = 0, prev_lf = 0, prev_mu = 0, prev_nu = 0;
  bool first = true;
  for (double eta : {0.2, 0.1, 0.01, 1e-4, 1e-8}) {
    const auto p = build_problem(r, eta);
    if (!first) {
      CHECK(p.lambda_e > prev_le);
      CHECK(p.lambda_f > prev_lf);
      CHECK(p.mu_eta > prev_mu);
      CHECK(p.nu_eta > prev_nu);
    }
    prev_le = p.lambda_e;
    prev_lf = p.lambda_f;
    prev_mu = p.mu_eta;
    prev_nu = p.nu_eta;
    first = false;
  }

  const auto tight = build_problem(r, 1e-16);
  const auto loose = build_problem(r, 1e-4);
  const double mu_ratio_tight = tight.mu_eta / tight.lambda_e;
  const double mu_ratio_loose = loose.mu_eta / loose.lambda_e;
  const double nu_ratio_tight = tight.nu_eta / tight.lambda_f;
  const double nu_ratio_loose = loose.nu_eta / loose.lambda_f;
  CHECK(mu_ratio_tight > mu_ratio_loose);
  CHECK(nu_ratio_tight > nu_ratio_loose);
  CHECK(mu_ratio_tight < 1.0);
  CHECK(mu_ratio_loose > 0.0);
  CHECK(nu_ratio_tight < 1.0);
  CHECK(nu_ratio_loose > 0.0);
}
