#pragma once

#include "dilate/dilatation.hpp"
#include "dilate/volume.hpp"

#include <json.hpp>

namespace dilate {

nlohmann::json to_json(const PFCertificate& cert);
/// Keys: tuple, polynomial, lambda_formula, lambda_matrix, agreement,
/// certificate (null when the matrix route did not run).
nlohmann::json to_json(const DilatationReport& report);
/// Keys: k, m, lambda_achieved, volume_bound, target_lambda, target_volume.
nlohmann::json to_json(const BoundReport& report);

}  // namespace dilate
