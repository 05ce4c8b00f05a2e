#ifndef SPARSEPD_RISK_HPP
#define SPARSEPD_RISK_HPP

#include <string>
#include <utility>
#include <vector>

#include "sparsepd/estimator.hpp"
#include "sparsepd/gaussian.hpp"
#include "sparsepd/prior.hpp"
#include "sparsepd/problem.hpp"

namespace sparsepd {

enum class RiskComponent { total, rho_A, rho_B };

std::string component_tag(RiskComponent c);

/// Sampled risk function rho(theta) with metadata for CSV/SVG emission.
struct RiskCurve {
  std::string model_tag;
  PredictionProblem problem;
  std::vector<double> theta_grid;
  std::vector<double> values;
  RiskComponent component = RiskComponent::total;
};

/// KL loss E_{Y~N(theta,r)} log[phi(Y; theta, r) / p^(Y | x)].  Closed form
/// for Gaussian-shaped variants, quadrature for Bayes mixtures.
double kl_loss(const Model& model, double theta, double x, const QuadratureSpec& quad);

/// Same quantity, forced through the inner Y-quadrature for every variant
/// (cross-check path; no closed forms).
double kl_loss_quadrature(const Model& model, double theta, double x,
                          const QuadratureSpec& quad);

/// KL risk E_{X~N(theta,1)} kl_loss(model, theta, X).
double kl_risk(const Model& model, double theta, const QuadratureSpec& quad);

/// Fully nested quadrature risk (outer X and inner Y both numeric).
double kl_risk_quadrature(const Model& model, double theta, const QuadratureSpec& quad);

/// rho_A (above-threshold, closed form via truncated moments) and rho_B
/// (below-threshold, segment quadrature) for a Threshold model whose above
/// branch is Uniform.  rho_A + rho_B = kl_risk within quadrature tolerance.
std::pair<double, double> risk_decomposition(const Model& threshold_model,
                                             double theta, const QuadratureSpec& quad);

/// q_A + q_B for hard thresholding at lambda: q_A = E_theta[(X-theta)^2 ;
/// |X| > lambda], q_B = theta^2 P_theta(|X| <= lambda).
double quadratic_risk_hard_threshold(double theta, double lambda);

/// Quadratic Bayes risk of the two-point prior pi[eta, mu] at its non-zero
/// atom, at noise level v (reduced to v = 1 by scaling invariance).
double two_point_bayes_quadratic_risk(double mu, const PredictionProblem& problem,
                                      double v, const QuadratureSpec& quad);

/// (1/2) int_{v_w}^1 q(theta, theta^_{pi,v}; v) dv/v^2 — the mixture
/// representation of the Bayes predictive risk.
double connecting_equation_rhs(const DiscretePrior& prior, double theta,
                               const PredictionProblem& problem,
                               const QuadratureSpec& quad);

/// min over k = 1..K of q_k(theta) = [theta-(1+r)mu_k]^2 - r^2 mu_k^2
/// + r(lambda_f^2 - mu_k^2), with mu_k the cluster support points.
double qk_min_bound(const PredictionProblem& problem, double theta);

struct SupRisk {
  double theta_star;
  double value;
};

/// Maximizes kl_risk over theta in [0, lambda_e + a + 3]: coarse grid of
/// step lambda_f/50 then golden-section refinement to width 1e-6*lambda_f.
/// Coarse-grid ties break toward smaller theta.
SupRisk sup_risk(const Model& model, const PredictionProblem& problem,
                 const QuadratureSpec& quad);

/// (1-eta) rho(0) + eta sup_theta rho(theta): the exact supremum of the
/// Bayes risk over the sparse prior class m(eta).
double bayes_risk_sparse_class(const Model& model, const PredictionProblem& problem,
                               const QuadratureSpec& quad);

RiskCurve risk_curve(const Model& model, const PredictionProblem& problem,
                     const std::vector<double>& theta_grid, const QuadratureSpec& quad,
                     RiskComponent component = RiskComponent::total);

}  // namespace sparsepd

#endif
