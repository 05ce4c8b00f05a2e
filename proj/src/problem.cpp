#include "sparsepd/problem.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sparsepd {

double max_admissible_eta(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("max_admissible_eta: r must be positive");
  return 1.0 / (1.0 + std::exp(0.5 * (1.0 + 1.0 / r)));
}

PredictionProblem build_problem(double r, double eta) {
  if (!(r > 0.0)) throw std::invalid_argument("build_problem: r must be positive");
  if (!(eta > 0.0 && eta < 1.0))
    throw std::invalid_argument("build_problem: eta must lie in (0, 1)");

  PredictionProblem p;
  p.r = r;
  p.eta = eta;
  p.v_w = 1.0 / (1.0 + 1.0 / r);
  // log(eta^{-1}(1-eta)) = -log eta + log(1-eta), in that order: at tiny eta
  // the first term dominates and log1p avoids cancellation in the second.
  const double log_arg = -std::log(eta) + std::log1p(-eta);
  if (!(log_arg > 0.0)) {
    std::ostringstream msg;
    msg << "build_problem: insufficient sparsity (eta = " << eta
        << "); require eta < " << max_admissible_eta(r) << " for r = " << r;
    throw std::domain_error(msg.str());
  }
  p.lambda_e = std::sqrt(2.0 * log_arg);
  p.lambda_f = std::sqrt(p.v_w) * p.lambda_e;
  if (!(p.lambda_f > 1.0)) {
    std::ostringstream msg;
    msg << "build_problem: insufficient sparsity (lambda_f = " << p.lambda_f
        << " <= 1); require eta < " << max_admissible_eta(r)
        << " for r = " << r;
    throw std::domain_error(msg.str());
  }
  p.a = std::sqrt(2.0 * std::log(p.lambda_f));
  // Positive root of the overshoot equation mu^2 + 2 a mu = lambda_e^2.
  p.mu_eta = std::sqrt(p.a * p.a + p.lambda_e * p.lambda_e) - p.a;
  p.nu_eta = std::sqrt(p.v_w) * p.mu_eta;
  return p;
}

PredictionProblem multivariate_problem(double r, std::int64_t n, std::int64_t s) {
  if (n < 1 || s < 1 || s > n)
    throw std::invalid_argument("multivariate_problem: require 1 <= s <= n");
  PredictionProblem p = build_problem(r, static_cast<double>(s) / static_cast<double>(n));
  p.n = n;
  p.s = s;
  return p;
}

}  // namespace sparsepd
