#pragma once

#include "json.hpp"

#include "wci/basket.hpp"
#include "wci/classify.hpp"
#include "wci/screen.hpp"
#include "wci/series.hpp"

namespace wci {

using nlohmann::json;

/// {candidate, alpha, dim, passed, checks: [{name, passed, witness}]}
json to_json(const ScreenReport& report);
/// {basket: [[b, r, count], ...], chi, chi2, k3: "p/q"}
json to_json(const FormalBasket& fb);
/// {weights, degrees, clean}
json to_json(const RecoveredPresentation& rec);
json to_json(const ClassificationRecord& record);
/// {alpha, config, records, statistics: {tuples, baskets, realized, pruned_by}, exhaustiveness_violations}
json to_json(const RunReport& report);

/// Inverse of to_json(FormalBasket); k3 is ignored. Throws InvalidInput.
FormalBasket formal_basket_from_json(const json& j);

}  // namespace wci
