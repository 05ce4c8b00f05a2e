#include "sparsepd/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace sparsepd {

using nlohmann::json;

std::string format_sig10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

json problem_to_json(const PredictionProblem& p) {
  json j{{"r", p.r},
         {"v_w", p.v_w},
         {"eta", p.eta},
         {"lambda_e", p.lambda_e},
         {"lambda_f", p.lambda_f},
         {"a", p.a},
         {"mu_eta", p.mu_eta},
         {"nu_eta", p.nu_eta}};
  if (p.n > 0) {
    j["n"] = p.n;
    j["s"] = p.s;
  }
  return j;
}

json prior_to_json(const DiscretePrior& prior) {
  json atoms = json::array();
  for (const Atom& a : prior.atoms) atoms.push_back({a.location, a.weight});
  return json{{"atoms", atoms}};
}

DiscretePrior prior_from_json(const json& j) {
  DiscretePrior prior;
  for (const auto& pair : j.at("atoms"))
    prior.atoms.push_back({pair.at(0).get<double>(), pair.at(1).get<double>()});
  prior.validate();
  return prior;
}

json summary_to_json(const MinimaxSummary& s) {
  return json{{"r", s.r},
              {"n", s.n},
              {"s", s.s},
              {"risk_all", s.risk_all},
              {"risk_plugin", s.risk_plugin},
              {"risk_gaussian", s.risk_gaussian},
              {"risk_linear", s.risk_linear},
              {"inefficiency_plugin", s.inefficiency_plugin}};
}

json mc_to_json(const McEstimate& e) {
  return json{{"estimate", e.estimate}, {"std_error", e.std_error}};
}

std::string risk_curve_csv(const RiskCurve& curve, std::optional<double> level) {
  std::ostringstream out;
  out << "theta,value,component,model,r,eta\n";
  const std::string r_str = format_sig10(curve.problem.r);
  const std::string eta_str = format_sig10(curve.problem.eta);
  if (level) {
    out << "0," << format_sig10(*level) << ",level," << curve.model_tag << ','
        << r_str << ',' << eta_str << '\n';
  }
  const std::string comp = component_tag(curve.component);
  for (std::size_t i = 0; i < curve.theta_grid.size(); ++i) {
    out << format_sig10(curve.theta_grid[i]) << ',' << format_sig10(curve.values[i])
        << ',' << comp << ',' << curve.model_tag << ',' << r_str << ',' << eta_str
        << '\n';
  }
  return out.str();
}

RiskCurve risk_curve_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "theta,value,component,model,r,eta")
    throw std::invalid_argument("risk_curve_from_csv: bad header");
  RiskCurve curve;
  bool have_meta = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string theta, value, component, model, r, eta;
    if (!std::getline(row, theta, ',') || !std::getline(row, value, ',') ||
        !std::getline(row, component, ',') || !std::getline(row, model, ',') ||
        !std::getline(row, r, ',') || !std::getline(row, eta, ','))
      throw std::invalid_argument("risk_curve_from_csv: bad row: " + line);
    if (component == "level") continue;  // metadata row
    if (!have_meta) {
      curve.model_tag = model;
      curve.problem.r = std::stod(r);
      curve.problem.eta = std::stod(eta);
      if (component == "rho_A") curve.component = RiskComponent::rho_A;
      else if (component == "rho_B") curve.component = RiskComponent::rho_B;
      else curve.component = RiskComponent::total;
      have_meta = true;
    }
    curve.theta_grid.push_back(std::stod(theta));
    curve.values.push_back(std::stod(value));
  }
  return curve;
}

std::string risk_curve_svg(const RiskCurve& curve, std::optional<double> level,
                           const std::vector<double>& atom_marks) {
  const double width = 640.0, height = 420.0, margin = 48.0;
  if (curve.theta_grid.empty())
    throw std::invalid_argument("risk_curve_svg: empty curve");
  double x_lo = curve.theta_grid.front(), x_hi = curve.theta_grid.back();
  double y_lo = 0.0, y_hi = curve.values.front();
  for (double v : curve.values) y_hi = std::max(y_hi, v);
  if (level) y_hi = std::max(y_hi, *level);
  if (y_hi <= y_lo) y_hi = y_lo + 1.0;
  if (x_hi <= x_lo) x_hi = x_lo + 1.0;
  auto sx = [&](double x) {
    return margin + (x - x_lo) / (x_hi - x_lo) * (width - 2 * margin);
  };
  auto sy = [&](double y) {
    return height - margin - (y - y_lo) / (y_hi - y_lo) * (height - 2 * margin);
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  out << "  <line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
      << width - margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
      << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  if (level) {
    out << "  <line x1=\"" << margin << "\" y1=\"" << sy(*level) << "\" x2=\""
        << width - margin << "\" y2=\"" << sy(*level)
        << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
  }
  for (double mu : atom_marks) {
    if (mu < x_lo || mu > x_hi) continue;
    out << "  <circle cx=\"" << sx(mu) << "\" cy=\"" << height - margin
        << "\" r=\"3\" fill=\"black\"/>\n";
  }
  out << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < curve.theta_grid.size(); ++i) {
    if (i) out << ' ';
    out << format_sig10(sx(curve.theta_grid[i])) << ','
        << format_sig10(sy(curve.values[i]));
  }
  out << "\"/>\n";
  out << "  <text x=\"" << width / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-size=\"12\">theta</text>\n";
  out << "  <text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
         "font-size=\"12\">"
      << curve.model_tag << " (" << component_tag(curve.component)
      << "), r=" << format_sig10(curve.problem.r)
      << ", eta=" << format_sig10(curve.problem.eta) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace sparsepd
