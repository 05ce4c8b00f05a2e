#ifndef SPARSEPD_GAUSSIAN_HPP
#define SPARSEPD_GAUSSIAN_HPP

#include <functional>
#include <vector>

namespace sparsepd {

/// Node counts and domain-splitting policy for the numerical integrals.
/// split_points mark abscissae where an integrand is discontinuous
/// (threshold estimators); they must be strictly increasing.
struct QuadratureSpec {
  int hermite_nodes = 96;
  int legendre_nodes = 64;
  std::vector<double> split_points{};

  void validate() const;
};

/// Gaussian density with given mean and variance. Throws std::domain_error
/// for variance <= 0.
double normal_pdf(double x, double mean, double variance);
double log_normal_pdf(double x, double mean, double variance);

/// Right tail probability P(Z > x) of the standard normal.
/// Evaluated through erfc so the far tail keeps full relative accuracy;
/// stays positive (subnormal) out to x = 38.
double upper_tail(double x);
double log_upper_tail(double x);

struct TruncatedMoment {
  double mass;    // P(|X| > lambda), X ~ N(theta, 1)
  double moment;  // E[(X - theta)^2 ; |X| > lambda]
};

/// Mass and centered second moment of X ~ N(theta,1) outside [-lambda, lambda],
/// via the closed form  int_z^inf t^2 phi(t) dt = z phi(z) + Phi~(z).
TruncatedMoment truncated_second_moment(double theta, double lambda);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for weight exp(-t^2), exact on polynomials of
/// degree <= 2n-1. Rules are cached; the cache is safe for concurrent use.
const QuadratureRule& hermite_rule(int n);

/// Gauss-Legendre rule on [lo, hi], exact on polynomials of degree <= 2n-1.
QuadratureRule legendre_rule(int n, double lo, double hi);

/// Adaptive Gauss-Legendre integration of f on [lo, hi] to absolute
/// tolerance abs_tol. Deterministic (bisection refinement).
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol);

/// E[g(X)] for X ~ N(mean, sd^2), integrating over mean +/- 10 sd with the
/// domain cut at the listed discontinuities of g.
double gauss_expectation(const std::function<double(double)>& g, double mean,
                         double sd, const std::vector<double>& splits = {},
                         double abs_tol = 1e-11);

}  // namespace sparsepd

#endif
