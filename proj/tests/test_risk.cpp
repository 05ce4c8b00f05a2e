#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "sparsepd/risk.hpp"

using namespace sparsepd;

namespace {
const QuadratureSpec kQuad{};
}

TEST_CASE("uniform loss closed form") {
  const double r = 0.25;
  const double a1 = 0.5 * (std::log1p(1 / r) - 1 / (1 + r));
  const double a2 = 0.5 / (1 + r);
  const Model uniform = make_uniform(r);
  for (double theta : {-1.0, 0.0, 2.3})
    for (double x : {-0.5, 0.4, 3.0})
      CHECK(kl_loss(uniform, theta, x, kQuad) ==
            doctest::Approx(a1 + a2 * (theta - x) * (theta - x)).epsilon(1e-13));
}

TEST_CASE("zero-prior loss is quadratic and x-free") {
  const double r = 0.25;
  DiscretePrior zero;
  zero.atoms = {{0.0, 1.0}};
  const Model model = make_bayes(r, zero);
  for (double theta : {0.0, 1.0, 3.5})
    for (double x : {-2.0, 0.0, 5.0})
      CHECK(kl_loss(model, theta, x, kQuad) ==
            doctest::Approx(theta * theta / (2 * r)).epsilon(1e-13));
}

TEST_CASE("bayes loss: quadrature consistency and positivity") {
  const double r = 0.25;
  const Model model = make_bayes(r, two_point(0.05, 1.5));
  const double direct = kl_loss(model, 0.0, 0.0, kQuad);
  CHECK(direct >= 0.0);
  CHECK(direct == doctest::Approx(kl_loss_quadrature(model, 0.0, 0.0, kQuad)).epsilon(1e-10));
}

TEST_CASE("kl_risk closed forms") {
  CHECK(kl_risk(make_plugin(0.25, Mle{}), 1.7, kQuad) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(kl_risk(make_uniform(1.0), -0.4, kQuad) ==
        doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));
  // linear risk formula vs full nested quadrature
  const Model lin = make_linear(0.4, 0.7);
  CHECK(kl_risk(lin, 1.3, kQuad) ==
        doctest::Approx(kl_risk_quadrature(lin, 1.3, kQuad)).epsilon(1e-9));
  // unbounded off alpha = 1
  CHECK(kl_risk(make_linear(0.25, 0.6), 1000.0, kQuad) > 100.0);
  // uniform via nested quadrature
  for (double r : {0.25, 1.0, 4.0})
    CHECK(kl_risk_quadrature(make_uniform(r), 0.9, kQuad) ==
          doctest::Approx(0.5 * std::log1p(1 / r)).epsilon(1e-10));
}

TEST_CASE("plug-in identity") {
  const double r = 0.25, lam = 2.0;
  const Model plug = make_plugin(r, HardThreshold{lam});
  for (double theta : {0.0, 0.8, 2.0, 3.5})
    CHECK(kl_risk_quadrature(plug, theta, kQuad) ==
          doctest::Approx(quadratic_risk_hard_threshold(theta, lam) / (2 * r))
              .epsilon(1e-8));
}

TEST_CASE("quadratic risk of hard thresholding") {
  CHECK(quadratic_risk_hard_threshold(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  const double lam = 2.4;
  const auto tm = truncated_second_moment(0, lam);
  CHECK(quadratic_risk_hard_threshold(0, lam) == doctest::Approx(tm.moment).epsilon(1e-14));
  // bounded by 1 + (lam + 1)^2 for lam > 1
  for (double theta = 0; theta <= 8; theta += 0.25)
    CHECK(quadratic_risk_hard_threshold(theta, 2.0) <= 1 + 9.0);
}

TEST_CASE("risk decomposition") {
  const auto p = build_problem(0.25, 0.05);
  const Model cluster = make_threshold_cluster(p);
  for (double theta : {0.0, p.lambda_f, p.lambda_e}) {
    const auto [rho_a, rho_b] = risk_decomposition(cluster, theta, kQuad);
    CHECK(rho_a + rho_b ==
          doctest::Approx(kl_risk(cluster, theta, kQuad)).epsilon(1e-8));
  }
  // rho_B(0) <= -log(1 - eta) <= eta
  const auto [rho_a0, rho_b0] = risk_decomposition(cluster, 0.0, kQuad);
  CHECK(rho_b0 <= -std::log1p(-p.eta) + 1e-12);
  CHECK(rho_b0 <= p.eta);

  // degenerate threshold: tiny lambda makes rho_A the whole uniform risk
  const Model tiny = make_threshold(p.r, 1e-6, make_uniform(p.r), make_uniform(p.r));
  const auto [ra, rb] = risk_decomposition(tiny, 0.3, kQuad);
  CHECK(ra == doctest::Approx(kl_risk(make_uniform(p.r), 0.3, kQuad)).epsilon(1e-3));
  CHECK(rb <= 1e-6);

  CHECK_THROWS_AS(risk_decomposition(make_uniform(0.25), 0.0, kQuad), std::domain_error);
  const Model wrong_above =
      make_threshold(p.r, p.lambda_e, make_uniform(p.r), make_plugin(p.r, Mle{}));
  CHECK_THROWS_AS(risk_decomposition(wrong_above, 0.0, kQuad), std::domain_error);
}

TEST_CASE("two-point bayes quadratic risk") {
  const auto p = build_problem(0.25, 0.05);
  CHECK(two_point_bayes_quadratic_risk(0.0, p, 1.0, kQuad) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // scaling reduction agrees with a direct evaluation at noise level v
  const double mu = 1.2, v = 0.5;
  const auto prior = two_point(p.eta, mu);
  const double direct = gauss_expectation(
      [&](double w) {
        const double d = posterior_mean(prior, w, v) - mu;
        return d * d;
      },
      mu, std::sqrt(v), {}, 1e-12);
  CHECK(two_point_bayes_quadratic_risk(mu, p, v, kQuad) ==
        doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("connecting equation") {
  const auto p = build_problem(0.25, 0.05);
  // zero prior: rhs = theta^2 / (2r)
  DiscretePrior zero;
  zero.atoms = {{0.0, 1.0}};
  for (double theta : {0.0, 1.0, 2.5})
    CHECK(connecting_equation_rhs(zero, theta, p, kQuad) ==
          doctest::Approx(theta * theta / (2 * p.r)).epsilon(1e-9));
  // cluster prior at theta = lambda_f: rhs equals the Bayes KL risk
  const auto prior = cluster_prior(p);
  const Model bayes = make_bayes(p.r, prior);
  CHECK(std::abs(kl_risk(bayes, p.lambda_f, kQuad) -
                 connecting_equation_rhs(prior, p.lambda_f, p, kQuad)) <= 1e-6);
}

TEST_CASE("q_k polynomials") {
  const auto p = build_problem(0.25, std::exp(-20.0));
  const double r = p.r;
  std::vector<double> mus;
  for (double mu = p.nu_eta; mu <= p.lambda_e + p.a; mu *= 1 + 2 * r) mus.push_back(mu);
  auto qk = [&](double theta, double mu) {
    const double c = theta - (1 + r) * mu;
    return c * c - r * r * mu * mu + r * (p.lambda_f * p.lambda_f - mu * mu);
  };
  for (double mu : mus) {
    // value at the atom, and endpoint equality q_k(mu_{k+1}) = q_k(mu_k)
    CHECK(qk(mu, mu) == doctest::Approx(r * (p.lambda_f * p.lambda_f - mu * mu))
                            .epsilon(1e-12));
    CHECK(qk((1 + 2 * r) * mu, mu) == doctest::Approx(qk(mu, mu)).epsilon(1e-12));
    CHECK(qk_min_bound(p, mu) <= qk(mu, mu) + 1e-12);
  }
  // sup over [lambda_f, lambda_e + a] of min_k q_k <= 2 r sqrt(v_w) a lambda_f
  const double cap = 2 * r * std::sqrt(p.v_w) * p.a * p.lambda_f;
  for (int i = 0; i <= 400; ++i) {
    const double theta =
        p.lambda_f + (p.lambda_e + p.a - p.lambda_f) * i / 400.0;
    CHECK(qk_min_bound(p, theta) <= cap + 1e-9);
  }
}

TEST_CASE("sup_risk and sparse-class bayes risk for the uniform model") {
  const auto p = build_problem(0.25, 0.05);
  const Model uniform = make_uniform(p.r);
  const auto sup = sup_risk(uniform, p, kQuad);
  const double expected = 0.5 * std::log1p(1 / p.r);
  CHECK(sup.value == doctest::Approx(expected).epsilon(1e-12));
  CHECK(bayes_risk_sparse_class(uniform, p, kQuad) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("minimum threshold size inequality (spot check)") {
  const auto p = build_problem(0.25, std::exp(-20.0));
  const double lam = 2.0;
  DiscretePrior zero;
  zero.atoms = {{0.0, 1.0}};
  const Model model =
      make_threshold(p.r, lam, make_bayes(p.r, zero), make_uniform(p.r));
  const auto [rho_a, rho_b] = risk_decomposition(model, 0.0, kQuad);
  CHECK(rho_a + rho_b >= lam * normal_pdf(lam, 0, 1) / (1 + p.r) - 1e-12);
}

TEST_CASE("risk_curve") {
  const auto p = build_problem(0.25, 0.05);
  const Model cluster = make_threshold_cluster(p);
  const std::vector<double> grid{0.0, 0.5, 1.0, 1.5};
  const auto curve = risk_curve(cluster, p, grid, kQuad);
  CHECK(curve.model_tag == "threshold");
  REQUIRE(curve.values.size() == grid.size());
  for (double v : curve.values) {
    CHECK(std::isfinite(v));
    CHECK(v >= -1e-9);
  }
  const auto rho_b = risk_curve(cluster, p, grid, kQuad, RiskComponent::rho_B);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(rho_b.values[i] <= curve.values[i] + 1e-8);

  const std::vector<double> bad{1.0, 1.0};
  CHECK_THROWS_AS(risk_curve(cluster, p, bad, kQuad), std::invalid_argument);
}
