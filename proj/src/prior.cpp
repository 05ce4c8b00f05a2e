#include "sparsepd/prior.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sparsepd/gaussian.hpp"

namespace sparsepd {

void DiscretePrior::validate() const {
  if (atoms.empty()) throw std::invalid_argument("DiscretePrior: no atoms");
  double sum = 0.0;
  for (const Atom& a : atoms) {
    if (!(a.weight > 0.0)) throw std::invalid_argument("DiscretePrior: weights must be positive");
    sum += a.weight;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("DiscretePrior: weights must sum to 1");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if (atoms[i].location == atoms[j].location)
        throw std::invalid_argument("DiscretePrior: locations must be distinct");
    if (atoms[i].location == 0.0 && i != 0)
      throw std::invalid_argument("DiscretePrior: atom at 0 must come first");
  }
}

DiscretePrior DiscretePrior::scaled(double c) const {
  if (!(c > 0.0)) throw std::invalid_argument("DiscretePrior::scaled: c must be positive");
  DiscretePrior out;
  out.atoms.reserve(atoms.size());
  for (const Atom& a : atoms) out.atoms.push_back({c * a.location, a.weight});
  return out;
}

DiscretePrior two_point(double eta, double mu) {
  if (!(eta > 0.0 && eta < 1.0))
    throw std::invalid_argument("two_point: eta must lie in (0, 1)");
  DiscretePrior prior;
  if (mu == 0.0) {
    prior.atoms = {{0.0, 1.0}};
  } else {
    prior.atoms = {{0.0, 1.0 - eta}, {mu, eta}};
  }
  return prior;
}

DiscretePrior three_point_lf(const PredictionProblem& p) {
  DiscretePrior prior;
  prior.atoms = {{0.0, 1.0 - p.eta},
                 {-p.nu_eta, 0.5 * p.eta},
                 {+p.nu_eta, 0.5 * p.eta}};
  return prior;
}

namespace {

std::vector<double> cluster_support(const PredictionProblem& p) {
  std::vector<double> mus;
  const double top = p.lambda_e + p.a;
  double mu = p.nu_eta;
  while (mu <= top) {
    mus.push_back(mu);
    mu *= (1.0 + 2.0 * p.r);
  }
  return mus;
}

}  // namespace

DiscretePrior cluster_prior(const PredictionProblem& p) {
  const std::vector<double> mus = cluster_support(p);
  if (mus.empty())
    throw std::logic_error("cluster_prior: K = 0 cannot happen (nu_eta < lambda_f < lambda_e)");
  const double w = p.eta / (2.0 * static_cast<double>(mus.size()));
  DiscretePrior prior;
  prior.atoms.push_back({0.0, 1.0 - p.eta});
  for (double mu : mus) {
    prior.atoms.push_back({-mu, w});
    prior.atoms.push_back({+mu, w});
  }
  return prior;
}

int k_count_limit(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("k_count_limit: r must be positive");
  // Small-eta limit of the support count.  As eta -> 0 the defining
  // condition mu_k <= lambda_e + a reduces to
  //   (k - 1) log(1 + 2r) <= log((lambda_e + a) / nu_eta) -> (1/2) log(1 + 1/r),
  // since nu_eta / lambda_e -> sqrt(v_w) while a / lambda_e -> 0.  The
  // convergence of the a-term is only logarithmic, so any fixed tiny eta
  // (even 1e-300) still overshoots near the jump points of K; the analytic
  // limit is exact everywhere.
  const double ratio = 0.5 * std::log1p(1.0 / r) / std::log1p(2.0 * r);
  return 1 + static_cast<int>(std::floor(ratio));
}

double marginal_density(const DiscretePrior& prior, double x, double v) {
  if (!(v > 0.0)) throw std::domain_error("marginal_density: v must be positive");
  double acc = 0.0;
  for (const Atom& a : prior.atoms) acc += a.weight * normal_pdf(x, a.location, v);
  return acc;
}

namespace {

std::vector<double> log_terms(const DiscretePrior& prior, double x, double v) {
  std::vector<double> lt;
  lt.reserve(prior.atoms.size());
  for (const Atom& a : prior.atoms)
    lt.push_back(std::log(a.weight) + log_normal_pdf(x, a.location, v));
  return lt;
}

}  // namespace

double log_marginal_density(const DiscretePrior& prior, double x, double v) {
  if (!(v > 0.0)) throw std::domain_error("log_marginal_density: v must be positive");
  const std::vector<double> lt = log_terms(prior, x, v);
  const double m = *std::max_element(lt.begin(), lt.end());
  double acc = 0.0;
  for (double t : lt) acc += std::exp(t - m);
  return m + std::log(acc);
}

std::vector<double> posterior_weights(const DiscretePrior& prior, double x, double v) {
  if (!(v > 0.0)) throw std::domain_error("posterior_weights: v must be positive");
  std::vector<double> w = log_terms(prior, x, v);
  const double m = *std::max_element(w.begin(), w.end());
  double acc = 0.0;
  for (double& t : w) {
    t = std::exp(t - m);
    acc += t;
  }
  for (double& t : w) t /= acc;
  return w;
}

double posterior_mean(const DiscretePrior& prior, double x, double v) {
  const std::vector<double> w = posterior_weights(prior, x, v);
  double acc = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) acc += prior.atoms[k].location * w[k];
  return acc;
}

}  // namespace sparsepd
