#ifndef SPARSEPD_SERIALIZE_HPP
#define SPARSEPD_SERIALIZE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "sparsepd/minimax.hpp"
#include "sparsepd/prior.hpp"
#include "sparsepd/problem.hpp"
#include "sparsepd/risk.hpp"

namespace sparsepd {

/// Floats formatted with 10 significant digits (%.10g).
std::string format_sig10(double x);

nlohmann::json problem_to_json(const PredictionProblem& p);
/// {"atoms": [[location, weight], ...]}
nlohmann::json prior_to_json(const DiscretePrior& prior);
DiscretePrior prior_from_json(const nlohmann::json& j);
nlohmann::json summary_to_json(const MinimaxSummary& s);
nlohmann::json mc_to_json(const McEstimate& e);

/// CSV with header `theta,value,component,model,r,eta`; when `level` is set
/// an extra row tagged component=level carries the reference level.
std::string risk_curve_csv(const RiskCurve& curve, std::optional<double> level = {});
RiskCurve risk_curve_from_csv(const std::string& text);

/// Single-curve SVG: polyline, optional dotted reference level, atom markers.
std::string risk_curve_svg(const RiskCurve& curve, std::optional<double> level = {},
                           const std::vector<double>& atom_marks = {});

}  // namespace sparsepd

#endif
