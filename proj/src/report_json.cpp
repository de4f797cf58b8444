#include "dilate/report_json.hpp"

namespace dilate {

nlohmann::json to_json(const PFCertificate& cert) {
  return {{"irreducible", cert.irreducible},
          {"primitive", cert.primitive},
          {"eigenvalue", cert.eigenvalue},
          {"right_eigenvector", cert.right_eigenvector},
          {"residual", cert.residual}};
}

nlohmann::json to_json(const DilatationReport& report) {
  nlohmann::json j;
  j["tuple"] = std::vector<int>(report.tuple.values().begin(), report.tuple.values().end());
  j["polynomial"] = report.polynomial.to_string();
  j["lambda_formula"] = report.lambda_formula;
  j["lambda_matrix"] = report.lambda_matrix ? nlohmann::json(*report.lambda_matrix) : nlohmann::json();
  j["agreement"] = report.agreement ? nlohmann::json(*report.agreement) : nlohmann::json();
  j["certificate"] = report.certificate ? to_json(*report.certificate) : nlohmann::json();
  return j;
}

nlohmann::json to_json(const BoundReport& report) {
  return {{"k", report.k},
          {"m", report.m},
          {"lambda_achieved", report.lambda_achieved},
          {"volume_bound", report.volume_bound},
          {"target_lambda", report.target_lambda},
          {"target_volume", report.target_volume}};
}

}  // namespace dilate
