#ifndef SPARSEPD_ESTIMATOR_HPP
#define SPARSEPD_ESTIMATOR_HPP

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "sparsepd/prior.hpp"
#include "sparsepd/problem.hpp"

namespace sparsepd {

// ---- point estimators -----------------------------------------------------

struct Mle {};
struct HardThreshold {
  double lambda;  // returns x when |x| > lambda, else 0
};
struct PosteriorMeanRule {
  DiscretePrior prior;  // E[theta | x] at noise level 1
};

using PointEstimator = std::variant<Mle, HardThreshold, PosteriorMeanRule>;

double point_estimate(const PointEstimator& rule, double x);

// ---- predictive density models ---------------------------------------------

struct Model;

struct Uniform {};
struct PlugIn {
  PointEstimator rule;
};
struct LinearShrink {
  double alpha;  // in [0, 1]; density N(alpha x, alpha + r)
};
struct GaussianPair {
  std::function<double(double)> mean_rule;
  std::function<double(double)> variance_rule;
};
struct BayesDiscrete {
  DiscretePrior prior;
};
struct ThresholdModel {
  double lambda;
  std::shared_ptr<const Model> below;  // used when |x| <= lambda (ties below)
  std::shared_ptr<const Model> above;
};
struct ProductModel {
  std::vector<Model> components;
};

using ModelKind = std::variant<Uniform, PlugIn, LinearShrink, GaussianPair,
                               BayesDiscrete, ThresholdModel, ProductModel>;

/// Evaluable predictive density p^(y|x).  r is carried inside so evaluation
/// needs no side channel.  Immutable; evaluation is pure and reentrant.
struct Model {
  double r;
  ModelKind kind;
};

Model make_uniform(double r);
Model make_plugin(double r, PointEstimator rule);
Model make_linear(double r, double alpha);
Model make_gaussian_pair(double r, std::function<double(double)> mean_rule,
                         std::function<double(double)> variance_rule);
Model make_bayes(double r, DiscretePrior prior);
/// below/above must be non-Threshold, non-Product (one nesting level).
Model make_threshold(double r, double lambda, Model below, Model above);
Model make_product(std::vector<Model> components);

/// Threshold(lambda_e, BayesDiscrete(cluster_prior), Uniform).
Model make_threshold_cluster(const PredictionProblem& problem);
/// Threshold(lambda_e, zero-prior N(0,r), Uniform) — predictive analog of
/// hard thresholding.
Model make_threshold_zero(const PredictionProblem& problem);
/// Threshold(lambda_e, BayesDiscrete(three_point_lf), Uniform).
Model make_threshold_lf(const PredictionProblem& problem);

/// Scalar density / log density.  Product models reject scalar calls.
double density(const Model& model, double y, double x);
double log_density(const Model& model, double y, double x);

/// Vector density for Product models (dimension must match component count).
double log_density(const Model& model, const std::vector<double>& y,
                   const std::vector<double>& x);
double density(const Model& model, const std::vector<double>& y,
               const std::vector<double>& x);

/// Short tag for CSV/JSON output: uniform, plugin, linear, gaussian_pair,
/// bayes, threshold, product.
std::string model_tag(const Model& model);

}  // namespace sparsepd

#endif
