#ifndef SPARSEPD_PRIOR_HPP
#define SPARSEPD_PRIOR_HPP

#include <vector>

#include "sparsepd/problem.hpp"

namespace sparsepd {

struct Atom {
  double location;
  double weight;
};

/// Finite discrete prior.  Invariants: weights positive and summing to 1,
/// locations distinct, the atom at 0 (when present) first.
struct DiscretePrior {
  std::vector<Atom> atoms;

  void validate() const;
  /// All locations multiplied by c > 0 (weights unchanged).
  DiscretePrior scaled(double c) const;
};

/// (1-eta) delta_0 + eta delta_mu; mu = 0 collapses to a unit atom at 0.
DiscretePrior two_point(double eta, double mu);

/// (1-eta) delta_0 + (eta/2)(delta_{-nu_eta} + delta_{+nu_eta}).
DiscretePrior three_point_lf(const PredictionProblem& problem);

/// (1-eta) delta_0 + eta/(2K) sum_{k=1}^{K} (delta_{-mu_k} + delta_{+mu_k}),
/// mu_1 = nu_eta, mu_{k+1} = (1+2r) mu_k, K = max{k : mu_k <= lambda_e + a}.
DiscretePrior cluster_prior(const PredictionProblem& problem);

/// Small-eta limit of the cluster prior's positive-atom count K, evaluated
/// from the defining condition at eta = 1e-300.
int k_count_limit(double r);

/// m_v(x) = sum_k pi_k phi(x; mu_k, v).
double marginal_density(const DiscretePrior& prior, double x, double v);

/// log m_v(x) via log-sum-exp (no underflow for |x| up to ~50).
double log_marginal_density(const DiscretePrior& prior, double x, double v);

/// Posterior atom probabilities given X = x at noise level v (log-sum-exp).
std::vector<double> posterior_weights(const DiscretePrior& prior, double x, double v);

/// E[theta | X = x] at noise level v.
double posterior_mean(const DiscretePrior& prior, double x, double v);

}  // namespace sparsepd

#endif
