#include "sparsepd/minimax.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sparsepd/risk.hpp"
#include "sparsepd/rng.hpp"

namespace sparsepd {

MinimaxSummary asymptotic_minimax(double r, std::int64_t n, std::int64_t s) {
  if (!(r > 0.0)) throw std::invalid_argument("asymptotic_minimax: r must be positive");
  if (s < 1 || s >= n)
    throw std::domain_error("asymptotic_minimax: require 1 <= s < n");
  MinimaxSummary out;
  out.r = r;
  out.n = n;
  out.s = s;
  const double base = static_cast<double>(s) *
                      std::log(static_cast<double>(n) / static_cast<double>(s));
  out.risk_all = base / (1.0 + r);
  out.risk_plugin = base / r;
  out.risk_gaussian = out.risk_plugin;
  out.risk_linear = 0.5 * static_cast<double>(n) * std::log1p(1.0 / r);
  out.inefficiency_plugin = 1.0 + 1.0 / r;
  return out;
}

double asymptotic_minimax_univariate(const PredictionProblem& p) {
  return p.eta * p.lambda_f * p.lambda_f / (2.0 * p.r);
}

McEstimate spike_prior_mc(std::int64_t n, double tau, std::int64_t samples,
                          std::uint64_t seed, std::uint64_t stream) {
  if (n < 2) throw std::domain_error("spike_prior_mc: n must be >= 2");
  if (samples < 100) throw std::domain_error("spike_prior_mc: samples must be >= 100");
  std::vector<double> vals(static_cast<std::size_t>(samples));
  double sum = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    // Disjoint substream per replicate: schedule-independent reproducibility.
    NormalStream rng(seed, stream * 0x100000000ULL + static_cast<std::uint64_t>(i));
    // y = tau e_1 + Z; work with l_j = tau y_j through log-sum-exp.
    double l1 = tau * (tau + rng.next());
    double max_l = l1;
    std::vector<double> ls(static_cast<std::size_t>(n));
    ls[0] = l1;
    for (std::int64_t j = 1; j < n; ++j) {
      const double lj = tau * rng.next();
      ls[static_cast<std::size_t>(j)] = lj;
      if (lj > max_l) max_l = lj;
    }
    double acc = 0.0;
    for (double l : ls) acc += std::exp(l - max_l);
    const double log_p1 = l1 - (max_l + std::log(acc));
    const double one_minus_p1 = -std::expm1(log_p1);
    const double val = one_minus_p1 * one_minus_p1;
    vals[static_cast<std::size_t>(i)] = val;
    sum += val;
  }
  const double m = sum / static_cast<double>(samples);
  // Two-pass variance: the textbook sum-of-squares form cancels
  // catastrophically when the replicates are (nearly) identical, e.g. tau = 0.
  double ss = 0.0;
  for (double val : vals) ss += (val - m) * (val - m);
  const double var = ss / static_cast<double>(samples - 1);
  McEstimate out;
  out.estimate = m;
  out.std_error = std::sqrt(var / static_cast<double>(samples));
  return out;
}

double independent_blocks_bound(double r, std::int64_t n, std::int64_t s,
                                std::int64_t samples, std::uint64_t seed,
                                const QuadratureSpec& quad) {
  quad.validate();
  if (!(r > 0.0))
    throw std::invalid_argument("independent_blocks_bound: r must be positive");
  if (s < 1 || n < 1)
    throw std::invalid_argument("independent_blocks_bound: n, s must be positive");
  const std::int64_t m = n / s;
  if (m < 2) throw std::domain_error("independent_blocks_bound: require floor(n/s) >= 2");
  const double v_w = 1.0 / (1.0 + 1.0 / r);
  const double lambda_m = std::sqrt(2.0 * std::log(static_cast<double>(m)));
  const double tau_m = lambda_m - std::log(lambda_m);
  const double nu_m = std::sqrt(v_w) * tau_m;
  const QuadratureRule rule = legendre_rule(quad.legendre_nodes, v_w, 1.0);
  double integral = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = rule.nodes[i];
    const double tau_v = nu_m / std::sqrt(v);
    const McEstimate mc =
        spike_prior_mc(m, tau_v, samples, seed, static_cast<std::uint64_t>(i + 1));
    integral += rule.weights[i] * (nu_m * nu_m / (v * v)) * mc.estimate;
  }
  return static_cast<double>(s) * 0.5 * integral;
}

double lf_suboptimality_check(double r, double eta, const QuadratureSpec& quad) {
  const double r_l = 0.5 * (std::sqrt(2.0) - 1.0);
  if (!(r > 0.0 && r < r_l)) {
    std::ostringstream msg;
    msg << "lf_suboptimality_check: require 0 < r < (sqrt(2)-1)/2 = " << r_l
        << " (got r = " << r << ")";
    throw std::domain_error(msg.str());
  }
  const PredictionProblem p = build_problem(r, eta);
  const double theta_star = 2.0 * (1.0 + r) * p.nu_eta;
  if (!(theta_star < p.lambda_e - p.a)) {
    std::ostringstream msg;
    msg << "lf_suboptimality_check: eta = " << eta
        << " is not sparse enough: need 2(1+r) nu_eta < lambda_e - a "
        << "(" << theta_star << " >= " << p.lambda_e - p.a
        << "); decrease eta";
    throw std::domain_error(msg.str());
  }
  const Model model = make_threshold_lf(p);
  const double rho = kl_risk(model, theta_star, quad);
  // eta * rho / (eta lambda_f^2 / (2r))
  return rho * 2.0 * r / (p.lambda_f * p.lambda_f);
}

double gaussian_class_origin_risk(const PointEstimator& rule,
                                  const PredictionProblem& problem,
                                  const QuadratureSpec& quad) {
  quad.validate();
  std::vector<double> splits;
  if (const auto* h = std::get_if<HardThreshold>(&rule))
    splits = {-h->lambda, h->lambda};
  const double r = problem.r;
  auto g = [&](double x) {
    const double t = point_estimate(rule, x);
    return std::log1p(t * t / r);
  };
  return gauss_expectation(g, 0.0, 1.0, splits, 1e-12);
}

McEstimate multivariate_mc_risk(const Model& product_model,
                                const std::vector<double>& theta,
                                std::int64_t samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("multivariate_mc_risk: samples must be >= 2");
  const auto* prod = std::get_if<ProductModel>(&product_model.kind);
  const std::size_t dim = prod != nullptr ? prod->components.size() : 1;
  if (theta.size() != dim)
    throw std::domain_error("multivariate_mc_risk: theta dimension mismatch");
  const double r = product_model.r;
  const double sqrt_r = std::sqrt(r);
  std::vector<double> vals(static_cast<std::size_t>(samples));
  double sum = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    NormalStream rng(seed, static_cast<std::uint64_t>(i));
    double loss = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
      const Model& comp = prod != nullptr ? prod->components[c] : product_model;
      const double x = theta[c] + rng.next();
      const double y = theta[c] + sqrt_r * rng.next();
      loss += log_normal_pdf(y, theta[c], r) - log_density(comp, y, x);
    }
    vals[static_cast<std::size_t>(i)] = loss;
    sum += loss;
  }
  const double m = sum / static_cast<double>(samples);
  double ss = 0.0;
  for (double loss : vals) ss += (loss - m) * (loss - m);
  const double var = ss / static_cast<double>(samples - 1);
  McEstimate out;
  out.estimate = m;
  out.std_error = std::sqrt(var / static_cast<double>(samples));
  return out;
}

}  // namespace sparsepd
