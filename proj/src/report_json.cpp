#include <json.hpp>

#include "dissdwell/output.hpp"

namespace dissdwell {
namespace {

using Json = nlohmann::ordered_json;

Json physical_json(const PhysicalConfig& p) {
  return Json{{"M", p.M},         {"hbar", p.hbar}, {"omega0", p.omega0}, {"eta", p.eta},
              {"k", p.k},         {"sigma", p.sigma}, {"z0", p.z0},     {"r", p.r}};
}

}  // namespace

std::string dwell_result_json(const DwellResult& result) {
  Json diagnostics = Json::object();
  for (const auto& d : result.diagnostics) diagnostics[d.label] = d.value;
  Json doc{{"zeta", result.zeta},
           {"u", result.u},
           {"convention", std::string(to_string(result.convention))},
           {"tau_closed_full", result.tau_closed_full},
           {"tau_closed_approx", result.tau_closed_approx},
           {"tau_numeric", result.tau_numeric ? Json(*result.tau_numeric) : Json(nullptr)},
           {"T_long", result.T_long},
           {"kernel_value", result.kernel_value},
           {"bracket_full", result.bracket_full},
           {"bracket_approx", result.bracket_approx},
           {"diagnostics", diagnostics}};
  return doc.dump(2) + "\n";
}

std::string consistency_report_json(const ConsistencyReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back(Json{{"config", physical_json(r.config)},
                        {"zeta", r.zeta},
                        {"u", r.u},
                        {"identity_residual", r.identity_residual},
                        {"prefactor_ratio_linear_zeta", r.prefactor_ratio_linear_zeta},
                        {"prefactor_ratio_width_squared", r.prefactor_ratio_width_squared},
                        {"bracket_without_sqrt_pi", r.bracket_without_sqrt_pi},
                        {"bracket_without_sqrt_pi_error", r.bracket_without_sqrt_pi_error},
                        {"erf_published_argument", r.erf_published_argument},
                        {"erf_rederived_argument", r.erf_rederived_argument},
                        {"shape_relative_effect", r.shape_relative_effect},
                        {"tau_numeric_literal", r.tau_numeric_literal},
                        {"tau_numeric_canonical", r.tau_numeric_canonical},
                        {"canonical_over_literal", r.canonical_over_literal},
                        {"numeric_vs_closed_relative", r.numeric_vs_closed_relative},
                        {"propagator_probe_time", r.propagator_probe_time},
                        {"propagator_width_deviation", r.propagator_width_deviation}});
  }
  return Json{{"rows", rows}}.dump(2) + "\n";
}

}  // namespace dissdwell
