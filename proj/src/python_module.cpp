#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sparsepd/minimax.hpp"
#include "sparsepd/risk.hpp"

namespace py = pybind11;
using namespace sparsepd;

PYBIND11_MODULE(_sparsepd, m) {
  m.doc() = "Sparse Gaussian predictive density estimation";

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def_readwrite("hermite_nodes", &QuadratureSpec::hermite_nodes)
      .def_readwrite("legendre_nodes", &QuadratureSpec::legendre_nodes);

  py::class_<PredictionProblem>(m, "PredictionProblem")
      .def_readonly("r", &PredictionProblem::r)
      .def_readonly("v_w", &PredictionProblem::v_w)
      .def_readonly("eta", &PredictionProblem::eta)
      .def_readonly("lambda_e", &PredictionProblem::lambda_e)
      .def_readonly("lambda_f", &PredictionProblem::lambda_f)
      .def_readonly("a", &PredictionProblem::a)
      .def_readonly("mu_eta", &PredictionProblem::mu_eta)
      .def_readonly("nu_eta", &PredictionProblem::nu_eta)
      .def_readonly("n", &PredictionProblem::n)
      .def_readonly("s", &PredictionProblem::s)
      .def("__repr__", [](const PredictionProblem& p) {
        return "PredictionProblem(r=" + std::to_string(p.r) +
               ", eta=" + std::to_string(p.eta) + ")";
      });

  py::class_<DiscretePrior>(m, "DiscretePrior")
      .def_property_readonly("atoms",
                             [](const DiscretePrior& p) {
                               std::vector<std::pair<double, double>> out;
                               for (const Atom& a : p.atoms)
                                 out.emplace_back(a.location, a.weight);
                               return out;
                             })
      .def("__len__", [](const DiscretePrior& p) { return p.atoms.size(); });

  py::class_<Model>(m, "Model").def_property_readonly("tag", &model_tag);

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("estimate", &McEstimate::estimate)
      .def_readonly("std_error", &McEstimate::std_error);

  py::class_<MinimaxSummary>(m, "MinimaxSummary")
      .def_readonly("r", &MinimaxSummary::r)
      .def_readonly("n", &MinimaxSummary::n)
      .def_readonly("s", &MinimaxSummary::s)
      .def_readonly("risk_all", &MinimaxSummary::risk_all)
      .def_readonly("risk_plugin", &MinimaxSummary::risk_plugin)
      .def_readonly("risk_gaussian", &MinimaxSummary::risk_gaussian)
      .def_readonly("risk_linear", &MinimaxSummary::risk_linear)
      .def_readonly("inefficiency_plugin", &MinimaxSummary::inefficiency_plugin);

  // problem
  m.def("build_problem", &build_problem, py::arg("r"), py::arg("eta"));
  m.def("multivariate_problem", &multivariate_problem, py::arg("r"),
        py::arg("n"), py::arg("s"));
  m.def("max_admissible_eta", &max_admissible_eta, py::arg("r"));

  // gaussian core
  m.def("normal_pdf", &normal_pdf, py::arg("x"), py::arg("mean"), py::arg("variance"));
  m.def("upper_tail", &upper_tail, py::arg("x"));

  // priors
  m.def("two_point", &two_point, py::arg("eta"), py::arg("mu"));
  m.def("three_point_lf", &three_point_lf, py::arg("problem"));
  m.def("cluster_prior", &cluster_prior, py::arg("problem"));
  m.def("k_count_limit", &k_count_limit, py::arg("r"));
  m.def("marginal_density", &marginal_density, py::arg("prior"), py::arg("x"), py::arg("v"));
  m.def("posterior_mean", &posterior_mean, py::arg("prior"), py::arg("x"), py::arg("v"));
  m.def("posterior_weights", &posterior_weights, py::arg("prior"), py::arg("x"), py::arg("v"));

  // estimators
  m.def("make_uniform", &make_uniform, py::arg("r"));
  m.def("make_linear", &make_linear, py::arg("r"), py::arg("alpha"));
  m.def("make_bayes", &make_bayes, py::arg("r"), py::arg("prior"));
  m.def("make_threshold_cluster", &make_threshold_cluster, py::arg("problem"));
  m.def("make_threshold_zero", &make_threshold_zero, py::arg("problem"));
  m.def("make_threshold_lf", &make_threshold_lf, py::arg("problem"));
  m.def(
      "density",
      [](const Model& m_, double y, double x) { return density(m_, y, x); },
      py::arg("model"), py::arg("y"), py::arg("x"));
  m.def(
      "log_density",
      [](const Model& m_, double y, double x) { return log_density(m_, y, x); },
      py::arg("model"), py::arg("y"), py::arg("x"));

  // risk
  m.def(
      "kl_loss",
      [](const Model& m_, double theta, double x) {
        return kl_loss(m_, theta, x, QuadratureSpec{});
      },
      py::arg("model"), py::arg("theta"), py::arg("x"));
  m.def(
      "kl_risk",
      [](const Model& m_, double theta) {
        return kl_risk(m_, theta, QuadratureSpec{});
      },
      py::arg("model"), py::arg("theta"));
  m.def(
      "risk_decomposition",
      [](const Model& m_, double theta) {
        return risk_decomposition(m_, theta, QuadratureSpec{});
      },
      py::arg("model"), py::arg("theta"));
  m.def("quadratic_risk_hard_threshold", &quadratic_risk_hard_threshold,
        py::arg("theta"), py::arg("lambda_"));
  m.def(
      "connecting_equation_rhs",
      [](const DiscretePrior& prior, double theta, const PredictionProblem& p) {
        return connecting_equation_rhs(prior, theta, p, QuadratureSpec{});
      },
      py::arg("prior"), py::arg("theta"), py::arg("problem"));
  m.def(
      "sup_risk",
      [](const Model& m_, const PredictionProblem& p) {
        const auto s = sup_risk(m_, p, QuadratureSpec{});
        return std::make_pair(s.theta_star, s.value);
      },
      py::arg("model"), py::arg("problem"));
  m.def(
      "bayes_risk_sparse_class",
      [](const Model& m_, const PredictionProblem& p) {
        return bayes_risk_sparse_class(m_, p, QuadratureSpec{});
      },
      py::arg("model"), py::arg("problem"));

  // minimax
  m.def("asymptotic_minimax", &asymptotic_minimax, py::arg("r"), py::arg("n"), py::arg("s"));
  m.def("asymptotic_minimax_univariate", &asymptotic_minimax_univariate, py::arg("problem"));
  m.def("spike_prior_mc", &spike_prior_mc, py::arg("n"), py::arg("tau"),
        py::arg("samples"), py::arg("seed"), py::arg("stream") = 0);
  m.def(
      "independent_blocks_bound",
      [](double r, std::int64_t n, std::int64_t s, std::int64_t samples,
         std::uint64_t seed, int legendre_nodes) {
        QuadratureSpec q;
        q.legendre_nodes = legendre_nodes;
        return independent_blocks_bound(r, n, s, samples, seed, q);
      },
      py::arg("r"), py::arg("n"), py::arg("s"), py::arg("samples"),
      py::arg("seed"), py::arg("legendre_nodes") = 16);
  m.def(
      "lf_suboptimality_check",
      [](double r, double eta) {
        return lf_suboptimality_check(r, eta, QuadratureSpec{});
      },
      py::arg("r"), py::arg("eta"));
  m.def("multivariate_mc_risk", &multivariate_mc_risk, py::arg("model"),
        py::arg("theta"), py::arg("samples"), py::arg("seed"));
}
