#include "sparsepd/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sparsepd/gaussian.hpp"

namespace sparsepd {

double point_estimate(const PointEstimator& rule, double x) {
  return std::visit(
      [&](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Mle>) {
          return x;
        } else if constexpr (std::is_same_v<T, HardThreshold>) {
          return std::abs(x) > r.lambda ? x : 0.0;
        } else {
          return posterior_mean(r.prior, x, 1.0);
        }
      },
      rule);
}

Model make_uniform(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("make_uniform: r must be positive");
  return Model{r, Uniform{}};
}

Model make_plugin(double r, PointEstimator rule) {
  if (!(r > 0.0)) throw std::invalid_argument("make_plugin: r must be positive");
  return Model{r, PlugIn{std::move(rule)}};
}

Model make_linear(double r, double alpha) {
  if (!(r > 0.0)) throw std::invalid_argument("make_linear: r must be positive");
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("make_linear: alpha must lie in [0, 1]");
  return Model{r, LinearShrink{alpha}};
}

Model make_gaussian_pair(double r, std::function<double(double)> mean_rule,
                         std::function<double(double)> variance_rule) {
  if (!(r > 0.0)) throw std::invalid_argument("make_gaussian_pair: r must be positive");
  if (!mean_rule || !variance_rule)
    throw std::invalid_argument("make_gaussian_pair: rules must be callable");
  return Model{r, GaussianPair{std::move(mean_rule), std::move(variance_rule)}};
}

Model make_bayes(double r, DiscretePrior prior) {
  if (!(r > 0.0)) throw std::invalid_argument("make_bayes: r must be positive");
  prior.validate();
  return Model{r, BayesDiscrete{std::move(prior)}};
}

namespace {

bool is_simple(const Model& m) {
  return !std::holds_alternative<ThresholdModel>(m.kind) &&
         !std::holds_alternative<ProductModel>(m.kind);
}

}  // namespace

Model make_threshold(double r, double lambda, Model below, Model above) {
  if (!(r > 0.0)) throw std::invalid_argument("make_threshold: r must be positive");
  if (!(lambda > 0.0)) throw std::invalid_argument("make_threshold: lambda must be positive");
  if (!is_simple(below) || !is_simple(above))
    throw std::invalid_argument(
        "make_threshold: below/above must be non-Threshold, non-Product models");
  ThresholdModel t;
  t.lambda = lambda;
  t.below = std::make_shared<const Model>(std::move(below));
  t.above = std::make_shared<const Model>(std::move(above));
  return Model{r, std::move(t)};
}

Model make_product(std::vector<Model> components) {
  if (components.empty())
    throw std::invalid_argument("make_product: needs at least one component");
  const double r = components.front().r;
  for (const Model& c : components)
    if (c.r != r) throw std::invalid_argument("make_product: components must share r");
  return Model{r, ProductModel{std::move(components)}};
}

Model make_threshold_cluster(const PredictionProblem& p) {
  return make_threshold(p.r, p.lambda_e, make_bayes(p.r, cluster_prior(p)),
                        make_uniform(p.r));
}

Model make_threshold_zero(const PredictionProblem& p) {
  DiscretePrior zero;
  zero.atoms = {{0.0, 1.0}};
  return make_threshold(p.r, p.lambda_e, make_bayes(p.r, std::move(zero)),
                        make_uniform(p.r));
}

Model make_threshold_lf(const PredictionProblem& p) {
  return make_threshold(p.r, p.lambda_e, make_bayes(p.r, three_point_lf(p)),
                        make_uniform(p.r));
}

double log_density(const Model& model, double y, double x) {
  const double r = model.r;
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          return log_normal_pdf(y, x, 1.0 + r);
        } else if constexpr (std::is_same_v<T, PlugIn>) {
          return log_normal_pdf(y, point_estimate(m.rule, x), r);
        } else if constexpr (std::is_same_v<T, LinearShrink>) {
          return log_normal_pdf(y, m.alpha * x, m.alpha + r);
        } else if constexpr (std::is_same_v<T, GaussianPair>) {
          return log_normal_pdf(y, m.mean_rule(x), m.variance_rule(x));
        } else if constexpr (std::is_same_v<T, BayesDiscrete>) {
          // log sum_k w_k(x) phi(y; mu_k, r), all in log domain.
          const std::vector<double> w = posterior_weights(m.prior, x, 1.0);
          double best = -std::numeric_limits<double>::infinity();
          std::vector<double> lt(w.size());
          for (std::size_t k = 0; k < w.size(); ++k) {
            lt[k] = (w[k] > 0.0 ? std::log(w[k]) : -1e300) +
                    log_normal_pdf(y, m.prior.atoms[k].location, r);
            best = std::max(best, lt[k]);
          }
          double acc = 0.0;
          for (double t : lt) acc += std::exp(t - best);
          return best + std::log(acc);
        } else if constexpr (std::is_same_v<T, ThresholdModel>) {
          const Model& branch = std::abs(x) <= m.lambda ? *m.below : *m.above;
          return log_density(branch, y, x);
        } else {
          throw std::domain_error("log_density: Product model requires vector arguments");
        }
      },
      model.kind);
}

double density(const Model& model, double y, double x) {
  return std::exp(log_density(model, y, x));
}

double log_density(const Model& model, const std::vector<double>& y,
                   const std::vector<double>& x) {
  const auto* prod = std::get_if<ProductModel>(&model.kind);
  if (prod == nullptr) {
    if (y.size() != 1 || x.size() != 1)
      throw std::domain_error("log_density: scalar model requires scalar arguments");
    return log_density(model, y[0], x[0]);
  }
  if (y.size() != prod->components.size() || x.size() != prod->components.size())
    throw std::domain_error("log_density: dimension mismatch with Product components");
  double acc = 0.0;
  for (std::size_t i = 0; i < prod->components.size(); ++i)
    acc += log_density(prod->components[i], y[i], x[i]);
  return acc;
}

double density(const Model& model, const std::vector<double>& y,
               const std::vector<double>& x) {
  return std::exp(log_density(model, y, x));
}

std::string model_tag(const Model& model) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Uniform>) return "uniform";
        else if constexpr (std::is_same_v<T, PlugIn>) return "plugin";
        else if constexpr (std::is_same_v<T, LinearShrink>) return "linear";
        else if constexpr (std::is_same_v<T, GaussianPair>) return "gaussian_pair";
        else if constexpr (std::is_same_v<T, BayesDiscrete>) return "bayes";
        else if constexpr (std::is_same_v<T, ThresholdModel>) return "threshold";
        else return "product";
      },
      model.kind);
}

}  // namespace sparsepd
