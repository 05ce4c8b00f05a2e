#ifndef SPARSEPD_MINIMAX_HPP
#define SPARSEPD_MINIMAX_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "sparsepd/estimator.hpp"
#include "sparsepd/gaussian.hpp"
#include "sparsepd/problem.hpp"

namespace sparsepd {

/// Asymptotic minimax risk levels over Theta_n[s] for the estimator classes:
/// all densities (N), plug-in (E), Gaussian-shaped (G), linear (L).
struct MinimaxSummary {
  double r;
  std::int64_t n;
  std::int64_t s;
  double risk_all;       // s log(n/s) / (1+r)
  double risk_plugin;    // s log(n/s) / r
  double risk_gaussian;  // equals risk_plugin
  double risk_linear;    // (n/2) log(1 + 1/r)
  double inefficiency_plugin;  // 1 + 1/r
};

MinimaxSummary asymptotic_minimax(double r, std::int64_t n, std::int64_t s);

/// Univariate sparse minimax level eta * lambda_f^2 / (2r).
double asymptotic_minimax_univariate(const PredictionProblem& problem);

struct McEstimate {
  double estimate;
  double std_error;
};

/// Monte Carlo estimate of E_{tau e_1}[1 - p_{1n}(y)]^2 with
/// p_{1n}(y) = exp(tau y_1) / sum_j exp(tau y_j) (log-sum-exp).
/// Deterministic in (n, tau, samples, seed, stream).
McEstimate spike_prior_mc(std::int64_t n, double tau, std::int64_t samples,
                          std::uint64_t seed, std::uint64_t stream = 0);

/// Independent-blocks lower bound: s * (1/2) int_{v_w}^1 (nu_m/sqrt(v))^2
/// * spike_mc(m, nu_m/sqrt(v)) dv/v with m = floor(n/s),
/// nu_m = sqrt(v_w) (lambda_m - log lambda_m), lambda_m = sqrt(2 log m).
/// Legendre nodes in v (quad.legendre_nodes), one MC stream per node.
double independent_blocks_bound(double r, std::int64_t n, std::int64_t s,
                                std::int64_t samples, std::uint64_t seed,
                                const QuadratureSpec& quad);

/// Risk ratio of the three-point (LF) threshold model at
/// theta* = 2(1+r) nu_eta against the univariate minimax level.
/// Requires r < (sqrt(2)-1)/2 and 2(1+r) nu_eta < lambda_e - a.
double lf_suboptimality_check(double r, double eta, const QuadratureSpec& quad);

/// E_0 log(1 + theta^(X)^2 / r) — origin risk of the variance-optimized
/// Gaussian-shaped estimate with mean rule theta^.
double gaussian_class_origin_risk(const PointEstimator& rule,
                                  const PredictionProblem& problem,
                                  const QuadratureSpec& quad);

/// Monte Carlo multivariate KL risk of a Product model at parameter theta.
McEstimate multivariate_mc_risk(const Model& product_model,
                                const std::vector<double>& theta,
                                std::int64_t samples, std::uint64_t seed);

}  // namespace sparsepd

#endif
