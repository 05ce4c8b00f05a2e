#ifndef SPARSEPD_PROBLEM_HPP
#define SPARSEPD_PROBLEM_HPP

#include <cstdint>

namespace sparsepd {

/// Full parameter bundle derived from the two inputs r (future-to-past
/// variance ratio) and eta (sparsity level).  Immutable after build.
///
///   v_w      = (1 + 1/r)^{-1}            oracle variance
///   lambda_e = sqrt(2 log eta^{-1}(1-eta))  detectability threshold
///   lambda_f = sqrt(v_w) * lambda_e
///   a        = sqrt(2 log lambda_f)
///   mu_eta   = positive root of mu^2 + 2 a mu = lambda_e^2
///   nu_eta   = sqrt(v_w) * mu_eta
struct PredictionProblem {
  double r = 0.0;
  double v_w = 0.0;
  double eta = 0.0;
  double lambda_e = 0.0;
  double lambda_f = 0.0;
  double a = 0.0;
  double mu_eta = 0.0;
  double nu_eta = 0.0;
  // Multivariate carriage (0 when built univariately).
  std::int64_t n = 0;
  std::int64_t s = 0;
};

/// Largest eta for which lambda_f(r, eta) > 1, i.e. 1/(1 + exp((1+1/r)/2)).
double max_admissible_eta(double r);

/// Builds the bundle.  Throws std::invalid_argument for r <= 0 or eta
/// outside (0,1); throws std::domain_error ("insufficient sparsity", naming
/// the maximal admissible eta) when lambda_f <= 1 so a would be undefined.
PredictionProblem build_problem(double r, double eta);

/// build_problem(r, s/n) with (n, s) carried along for multivariate formulas.
PredictionProblem multivariate_problem(double r, std::int64_t n, std::int64_t s);

}  // namespace sparsepd

#endif
