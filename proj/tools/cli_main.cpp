#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sparsepd/estimator.hpp"
#include "sparsepd/minimax.hpp"
#include "sparsepd/prior.hpp"
#include "sparsepd/problem.hpp"
#include "sparsepd/risk.hpp"
#include "sparsepd/serialize.hpp"

using nlohmann::json;
using namespace sparsepd;

namespace {

QuadratureSpec quad_from_env() {
  QuadratureSpec quad;
  if (const char* env = std::getenv("SPARSE_PREDEN_QUAD")) {
    int h = 0, l = 0;
    char comma = 0;
    std::istringstream in(env);
    if (!(in >> h >> comma >> l) || comma != ',')
      throw std::invalid_argument(
          "SPARSE_PREDEN_QUAD must be \"hermite,legendre\" (e.g. \"96,64\")");
    quad.hermite_nodes = h;
    quad.legendre_nodes = l;
  }
  quad.validate();
  return quad;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
}

std::vector<double> parse_grid(const std::string& spec) {
  double lo = 0, hi = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !(step > 0) || !(hi >= lo))
    throw std::invalid_argument("--grid must be lo:hi:step with step > 0, hi >= lo");
  std::vector<double> grid;
  const auto count = static_cast<std::size_t>((hi - lo) / step + 1e-9) + 1;
  for (std::size_t i = 0; i < count; ++i) grid.push_back(lo + static_cast<double>(i) * step);
  return grid;
}

Model model_by_name(const std::string& name, const PredictionProblem& p) {
  if (name == "hard") return make_threshold_zero(p);
  if (name == "lf") return make_threshold_lf(p);
  if (name == "cluster") return make_threshold_cluster(p);
  throw std::invalid_argument("--model must be one of hard|lf|cluster");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"Sparse Gaussian predictive density estimation toolkit"};
  app.require_subcommand(1);

  double r = 0.25, eta = 0.05, tau = 0.0;
  std::int64_t n = 0, s = 0, samples = 10000;
  std::uint64_t seed = 1;
  std::string model_name = "cluster", grid_spec, out_path, format = "csv",
              component_name = "total";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Output file (stdout when omitted)");
    cmd->add_option("--format", format, "Output format: csv|json|svg");
  };

  auto* thresholds = app.add_subcommand("thresholds", "Derived parameter bundle");
  thresholds->add_option("--r", r, "Variance ratio v_y/v_x")->required();
  thresholds->add_option("--eta", eta, "Sparsity level")->required();
  add_common(thresholds);

  auto* table_k = app.add_subcommand("table-k", "Cluster support count K(r)");
  std::vector<double> extra_r;
  table_k->add_option("--r", extra_r, "Extra r values beyond the built-in rows");
  add_common(table_k);

  auto* risk_cmd = app.add_subcommand("risk-curve", "Risk curve rho(theta)");
  risk_cmd->add_option("--r", r)->required();
  risk_cmd->add_option("--eta", eta)->required();
  risk_cmd->add_option("--model", model_name, "hard|lf|cluster");
  risk_cmd->add_option("--grid", grid_spec, "theta grid lo:hi:step");
  risk_cmd->add_option("--component", component_name, "total|rho_A|rho_B");
  add_common(risk_cmd);

  auto* mm = app.add_subcommand("minimax-summary", "Asymptotic minimax levels");
  mm->add_option("--r", r)->required();
  mm->add_option("--n", n)->required();
  mm->add_option("--s", s)->required();
  add_common(mm);

  auto* connect = app.add_subcommand("connect-check",
                                     "Connecting-equation discrepancy");
  connect->add_option("--r", r)->required();
  connect->add_option("--eta", eta)->required();
  add_common(connect);

  auto* spike = app.add_subcommand("spike-mc", "Single-spike prior Monte Carlo");
  spike->add_option("--n", n)->required();
  spike->add_option("--tau", tau, "Spike height (default 0.8 tau_n)");
  spike->add_option("--samples", samples);
  spike->add_option("--seed", seed);
  add_common(spike);

  auto* blocks = app.add_subcommand("blocks-bound", "Independent-blocks lower bound");
  blocks->add_option("--r", r)->required();
  blocks->add_option("--n", n)->required();
  blocks->add_option("--s", s)->required();
  blocks->add_option("--samples", samples);
  blocks->add_option("--seed", seed);
  add_common(blocks);

  auto* lf = app.add_subcommand("lf-subopt", "Three-point prior sub-optimality ratio");
  lf->add_option("--r", r)->required();
  lf->add_option("--eta", eta)->required();
  add_common(lf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e);
      return 0;
    }
    app.exit(e);
    return 1;
  }

  const QuadratureSpec quad = quad_from_env();

  if (thresholds->parsed()) {
    const PredictionProblem p = build_problem(r, eta);
    if (format == "csv") {
      std::ostringstream csv;
      csv << "field,value\n";
      const json j = problem_to_json(p);
      for (const auto& [key, value] : j.items())
        csv << key << ',' << format_sig10(value.get<double>()) << '\n';
      emit(csv.str(), out_path);
    } else {
      emit(dump(problem_to_json(p)), out_path);
    }
  } else if (table_k->parsed()) {
    std::vector<double> rows{0.1073, 0.1235, 0.1465, 0.1826, 0.2485, 0.4196, 1.0};
    rows.insert(rows.end(), extra_r.begin(), extra_r.end());
    if (format == "json") {
      json j = json::array();
      for (double rv : rows) j.push_back({{"r", rv}, {"K", k_count_limit(rv)}});
      emit(dump(j), out_path);
    } else {
      std::ostringstream csv;
      csv << "r,K\n";
      for (double rv : rows) csv << format_sig10(rv) << ',' << k_count_limit(rv) << '\n';
      emit(csv.str(), out_path);
    }
  } else if (risk_cmd->parsed()) {
    const PredictionProblem p = build_problem(r, eta);
    const Model model = model_by_name(model_name, p);
    RiskComponent component = RiskComponent::total;
    if (component_name == "rho_A") component = RiskComponent::rho_A;
    else if (component_name == "rho_B") component = RiskComponent::rho_B;
    else if (component_name != "total")
      throw std::invalid_argument("--component must be total|rho_A|rho_B");
    std::vector<double> grid;
    if (grid_spec.empty()) {
      const double step = p.lambda_f / 25.0;
      std::ostringstream def;
      def << 0.0 << ':' << (p.lambda_e + p.a) << ':' << step;
      grid = parse_grid(def.str());
    } else {
      grid = parse_grid(grid_spec);
    }
    const RiskCurve curve = risk_curve(model, p, grid, quad, component);
    const double level = p.lambda_f * p.lambda_f / (2.0 * p.r);
    if (format == "svg") {
      std::vector<double> marks;
      if (model_name == "cluster")
        for (const Atom& a : cluster_prior(p).atoms)
          if (a.location > 0.0) marks.push_back(a.location);
      emit(risk_curve_svg(curve, level, marks), out_path);
    } else if (format == "json") {
      json j{{"model", curve.model_tag},
             {"component", component_tag(curve.component)},
             {"level", level},
             {"problem", problem_to_json(p)},
             {"theta", curve.theta_grid},
             {"value", curve.values}};
      emit(dump(j), out_path);
    } else {
      emit(risk_curve_csv(curve, level), out_path);
    }
  } else if (mm->parsed()) {
    emit(dump(summary_to_json(asymptotic_minimax(r, n, s))), out_path);
  } else if (connect->parsed()) {
    const PredictionProblem p = build_problem(r, eta);
    const std::vector<std::pair<std::string, DiscretePrior>> priors{
        {"two_point", two_point(eta, p.nu_eta)},
        {"three_point", three_point_lf(p)},
        {"cluster", cluster_prior(p)}};
    const std::vector<double> thetas{0.0, p.nu_eta, p.lambda_f, p.lambda_e};
    json per_prior;
    double worst = 0.0;
    for (const auto& [name, prior] : priors) {
      double prior_worst = 0.0;
      for (double theta : thetas) {
        const Model model = make_bayes(r, prior);
        const double lhs = kl_risk(model, theta, quad);
        const double rhs = connecting_equation_rhs(prior, theta, p, quad);
        prior_worst = std::max(prior_worst, std::abs(lhs - rhs));
      }
      per_prior[name] = prior_worst;
      worst = std::max(worst, prior_worst);
    }
    emit(dump(json{{"max_abs_discrepancy", worst}, {"per_prior", per_prior}}),
         out_path);
  } else if (spike->parsed()) {
    double tau_used = tau;
    if (tau_used == 0.0) {
      const double lambda_n = std::sqrt(2.0 * std::log(static_cast<double>(n)));
      tau_used = 0.8 * (lambda_n - std::log(lambda_n));
    }
    const McEstimate mc = spike_prior_mc(n, tau_used, samples, seed);
    json j = mc_to_json(mc);
    j["n"] = n;
    j["tau"] = tau_used;
    j["samples"] = samples;
    j["seed"] = seed;
    emit(dump(j), out_path);
  } else if (blocks->parsed()) {
    const double bound = independent_blocks_bound(r, n, s, samples, seed, quad);
    const std::int64_t m = n / s;
    const double v_w = 1.0 / (1.0 + 1.0 / r);
    const double lambda_m = std::sqrt(2.0 * std::log(static_cast<double>(m)));
    const double tau_m = lambda_m - std::log(lambda_m);
    const double reference = static_cast<double>(s) * v_w * tau_m * tau_m / (2.0 * r);
    json j{{"bound", bound},
           {"reference_level", reference},
           {"ratio", bound / reference},
           {"r", r},
           {"n", n},
           {"s", s},
           {"samples", samples},
           {"seed", seed}};
    emit(dump(j), out_path);
  } else if (lf->parsed()) {
    const double ratio = lf_suboptimality_check(r, eta, quad);
    emit(dump(json{{"ratio", ratio}, {"r", r}, {"eta", eta}}), out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
