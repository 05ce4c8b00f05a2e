#include "sparsepd/risk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sparsepd {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;
// Absolute tolerances for the adaptive panels.  Fixed-node rules miss the
// 1e-6 connecting-equation budget on the sharpest posterior transitions, so
// the risk integrals run adaptively with these targets.
constexpr double kInnerTol = 1e-12;
constexpr double kOuterTol = 1e-11;

double gaussian_form_loss(double theta, double theta_hat, double d_hat, double r) {
  return 0.5 * std::log(d_hat / r) +
         (r + (theta_hat - theta) * (theta_hat - theta)) / (2.0 * d_hat) - 0.5;
}

// x-discontinuities of the model's density (threshold boundaries).
std::vector<double> model_splits(const Model& model) {
  std::vector<double> splits;
  if (const auto* t = std::get_if<ThresholdModel>(&model.kind)) {
    splits = {-t->lambda, t->lambda};
  } else if (const auto* p = std::get_if<PlugIn>(&model.kind)) {
    if (const auto* h = std::get_if<HardThreshold>(&p->rule))
      splits = {-h->lambda, h->lambda};
  }
  return splits;
}

// E_Y log p^(Y|x) for a Bayes mixture, weights precomputed once per x.
double bayes_expected_log_density(const BayesDiscrete& m, double r, double theta,
                                  double x) {
  const std::vector<double> w = posterior_weights(m.prior, x, 1.0);
  std::vector<double> log_w(w.size());
  for (std::size_t k = 0; k < w.size(); ++k)
    log_w[k] = w[k] > 0.0 ? std::log(w[k]) : -1e300;
  const double log_norm = -0.5 * (kLog2Pi + std::log(r));
  auto log_mix = [&](double y) {
    double best = -std::numeric_limits<double>::infinity();
    double acc = 0.0;
    // two passes: max then sum (atom count is tiny)
    std::vector<double> lt(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
      const double d = y - m.prior.atoms[k].location;
      lt[k] = log_w[k] + log_norm - 0.5 * d * d / r;
      best = std::max(best, lt[k]);
    }
    for (double t : lt) acc += std::exp(t - best);
    return best + std::log(acc);
  };
  return gauss_expectation(log_mix, theta, std::sqrt(r), {}, kInnerTol);
}

}  // namespace

std::string component_tag(RiskComponent c) {
  switch (c) {
    case RiskComponent::rho_A: return "rho_A";
    case RiskComponent::rho_B: return "rho_B";
    default: return "total";
  }
}

double kl_loss(const Model& model, double theta, double x, const QuadratureSpec& quad) {
  const double r = model.r;
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          return gaussian_form_loss(theta, x, 1.0 + r, r);
        } else if constexpr (std::is_same_v<T, PlugIn>) {
          return gaussian_form_loss(theta, point_estimate(m.rule, x), r, r);
        } else if constexpr (std::is_same_v<T, LinearShrink>) {
          return gaussian_form_loss(theta, m.alpha * x, m.alpha + r, r);
        } else if constexpr (std::is_same_v<T, GaussianPair>) {
          return gaussian_form_loss(theta, m.mean_rule(x), m.variance_rule(x), r);
        } else if constexpr (std::is_same_v<T, BayesDiscrete>) {
          if (m.prior.atoms.size() == 1) {
            // Degenerate prior: the predictive density is N(mu, r) exactly.
            return gaussian_form_loss(theta, m.prior.atoms[0].location, r, r);
          }
          const double entropy_term = -0.5 * (kLog2Pi + std::log(r)) - 0.5;
          return entropy_term - bayes_expected_log_density(m, r, theta, x);
        } else if constexpr (std::is_same_v<T, ThresholdModel>) {
          const Model& branch = std::abs(x) <= m.lambda ? *m.below : *m.above;
          return kl_loss(branch, theta, x, quad);
        } else {
          throw std::domain_error("kl_loss: requires a scalar model");
        }
      },
      model.kind);
}

double kl_loss_quadrature(const Model& model, double theta, double x,
                          const QuadratureSpec& quad) {
  if (std::holds_alternative<ProductModel>(model.kind))
    throw std::domain_error("kl_loss_quadrature: requires a scalar model");
  const double r = model.r;
  auto log_p = [&](double y) { return log_density(model, y, x); };
  const double expected = gauss_expectation(log_p, theta, std::sqrt(r), {}, kInnerTol);
  return -0.5 * (kLog2Pi + std::log(r)) - 0.5 - expected;
}

double kl_risk(const Model& model, double theta, const QuadratureSpec& quad) {
  quad.validate();
  const double r = model.r;
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          return 0.5 * std::log1p(1.0 / r);
        } else if constexpr (std::is_same_v<T, PlugIn>) {
          if (std::holds_alternative<Mle>(m.rule)) return 0.5 / r;
          if (const auto* h = std::get_if<HardThreshold>(&m.rule))
            return quadratic_risk_hard_threshold(theta, h->lambda) / (2.0 * r);
          auto sq_err = [&](double x) {
            const double d = point_estimate(m.rule, x) - theta;
            return d * d;
          };
          return gauss_expectation(sq_err, theta, 1.0, {}, kOuterTol) / (2.0 * r);
        } else if constexpr (std::is_same_v<T, LinearShrink>) {
          const double alpha = m.alpha;
          if (alpha == 1.0) return 0.5 * std::log1p(1.0 / r);
          return 0.5 * std::log1p(alpha / r) +
                 (1.0 - alpha) * (1.0 - alpha) / (2.0 * (r + alpha)) *
                     (theta * theta - alpha / (1.0 - alpha));
        } else if constexpr (std::is_same_v<T, BayesDiscrete>) {
          if (m.prior.atoms.size() == 1) {
            const double d = m.prior.atoms[0].location - theta;
            return d * d / (2.0 * r);
          }
          auto loss = [&](double x) { return kl_loss(model, theta, x, quad); };
          return gauss_expectation(loss, theta, 1.0, {}, kOuterTol);
        } else if constexpr (std::is_same_v<T, GaussianPair> ||
                             std::is_same_v<T, ThresholdModel>) {
          auto loss = [&](double x) { return kl_loss(model, theta, x, quad); };
          return gauss_expectation(loss, theta, 1.0, model_splits(model), kOuterTol);
        } else {
          throw std::domain_error("kl_risk: requires a scalar model");
        }
      },
      model.kind);
}

double kl_risk_quadrature(const Model& model, double theta, const QuadratureSpec& quad) {
  quad.validate();
  auto loss = [&](double x) { return kl_loss_quadrature(model, theta, x, quad); };
  return gauss_expectation(loss, theta, 1.0, model_splits(model), kOuterTol);
}

std::pair<double, double> risk_decomposition(const Model& threshold_model,
                                             double theta, const QuadratureSpec& quad) {
  quad.validate();
  const auto* t = std::get_if<ThresholdModel>(&threshold_model.kind);
  if (t == nullptr || !std::holds_alternative<Uniform>(t->above->kind))
    throw std::domain_error(
        "risk_decomposition: requires a Threshold model with Uniform above");
  const double r = threshold_model.r;
  const double lambda = t->lambda;
  const double a1 = 0.5 * (std::log1p(1.0 / r) - 1.0 / (1.0 + r));
  const double a2 = 0.5 / (1.0 + r);
  const TruncatedMoment tm = truncated_second_moment(theta, lambda);
  const double rho_a = a1 * tm.mass + a2 * tm.moment;

  const Model& below = *t->below;
  const double lo = std::max(-lambda, theta - 10.0);
  const double hi = std::min(lambda, theta + 10.0);
  double rho_b = 0.0;
  if (lo < hi) {
    auto integrand = [&](double x) {
      return normal_pdf(x, theta, 1.0) * kl_loss(below, theta, x, quad);
    };
    rho_b = integrate(integrand, lo, hi, 1e-13);
  }
  return {rho_a, rho_b};
}

double quadratic_risk_hard_threshold(double theta, double lambda) {
  const TruncatedMoment tm = truncated_second_moment(theta, lambda);
  return tm.moment + theta * theta * (1.0 - tm.mass);
}

double two_point_bayes_quadratic_risk(double mu, const PredictionProblem& problem,
                                      double v, const QuadratureSpec& quad) {
  quad.validate();
  if (!(v > 0.0))
    throw std::domain_error("two_point_bayes_quadratic_risk: v must be positive");
  // Scaling invariance: q(mu, v) = v * q(mu/sqrt(v), 1) with locations scaled.
  const double root_v = std::sqrt(v);
  const double mu1 = mu / root_v;
  const DiscretePrior prior = two_point(problem.eta, mu1);
  auto sq_err = [&](double z) {
    const double d = posterior_mean(prior, z, 1.0) - mu1;
    return d * d;
  };
  return v * gauss_expectation(sq_err, mu1, 1.0, {}, kInnerTol);
}

double connecting_equation_rhs(const DiscretePrior& prior, double theta,
                               const PredictionProblem& problem,
                               const QuadratureSpec& quad) {
  quad.validate();
  prior.validate();
  auto q_of_v = [&](double v) {
    auto sq_err = [&](double w) {
      const double d = posterior_mean(prior, w, v) - theta;
      return d * d;
    };
    return gauss_expectation(sq_err, theta, std::sqrt(v), {}, kInnerTol);
  };
  auto integrand = [&](double v) { return q_of_v(v) / (v * v); };
  return 0.5 * integrate(integrand, problem.v_w, 1.0, kOuterTol);
}

double qk_min_bound(const PredictionProblem& problem, double theta) {
  const double r = problem.r;
  double best = std::numeric_limits<double>::infinity();
  const double top = problem.lambda_e + problem.a;
  for (double mu = problem.nu_eta; mu <= top; mu *= (1.0 + 2.0 * r)) {
    const double c = theta - (1.0 + r) * mu;
    const double qk = c * c - r * r * mu * mu +
                      r * (problem.lambda_f * problem.lambda_f - mu * mu);
    best = std::min(best, qk);
  }
  return best;
}

SupRisk sup_risk(const Model& model, const PredictionProblem& problem,
                 const QuadratureSpec& quad) {
  quad.validate();
  const double hi = problem.lambda_e + problem.a + 3.0;
  const double step = problem.lambda_f / 50.0;
  auto f = [&](double theta) { return kl_risk(model, theta, quad); };

  SupRisk best{0.0, f(0.0)};
  for (double theta = step; theta < hi + 0.5 * step; theta += step) {
    const double t = std::min(theta, hi);
    const double val = f(t);
    if (val > best.value) best = {t, val};  // ties keep the smaller theta
  }

  // Golden-section refinement around the best grid point.
  double a = std::max(0.0, best.theta_star - step);
  double b = std::min(hi, best.theta_star + step);
  const double gr = 0.61803398874989484820;
  const double width_tol = 1e-6 * problem.lambda_f;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > width_tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
    if (fc > best.value) best = {c, fc};
    if (fd > best.value) best = {d, fd};
  }
  return best;
}

double bayes_risk_sparse_class(const Model& model, const PredictionProblem& problem,
                               const QuadratureSpec& quad) {
  const double at_zero = kl_risk(model, 0.0, quad);
  const SupRisk sup = sup_risk(model, problem, quad);
  return (1.0 - problem.eta) * at_zero + problem.eta * sup.value;
}

RiskCurve risk_curve(const Model& model, const PredictionProblem& problem,
                     const std::vector<double>& theta_grid, const QuadratureSpec& quad,
                     RiskComponent component) {
  quad.validate();
  for (std::size_t i = 1; i < theta_grid.size(); ++i)
    if (!(theta_grid[i - 1] < theta_grid[i]))
      throw std::invalid_argument("risk_curve: grid must be strictly increasing");
  RiskCurve curve;
  curve.model_tag = model_tag(model);
  curve.problem = problem;
  curve.theta_grid = theta_grid;
  curve.component = component;
  curve.values.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    double value;
    if (component == RiskComponent::total) {
      value = kl_risk(model, theta, quad);
    } else {
      const auto [rho_a, rho_b] = risk_decomposition(model, theta, quad);
      value = component == RiskComponent::rho_A ? rho_a : rho_b;
    }
    curve.values.push_back(value);
  }
  return curve;
}

}  // namespace sparsepd
