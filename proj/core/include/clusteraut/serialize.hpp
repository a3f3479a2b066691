#pragma once

#include <nlohmann/json.hpp>

#include "clusteraut/automorphism.hpp"
#include "clusteraut/folding.hpp"
#include "clusteraut/pattern.hpp"
#include "clusteraut/root_system.hpp"
#include "clusteraut/universal.hpp"

namespace clusteraut {

using Json = nlohmann::ordered_json;

/// [[coeff, [exponents]], ...]; coefficients as decimal strings when they overflow int64.
Json to_json(const LaurentPoly& p);
Json to_json(const ExchangeMatrix& b);
/// {"seeds": [{"id", "variables", "matrix"}], "edges": [[a, b], ...], "variables": [...]}
Json to_json(const ExchangeGraph& g);
Json to_json(const ClusterAutomorphism& f);
/// {"order", "structure", "direct", "generators"}
Json to_json(const AutGroup& g);
Json to_json(const TauGroup& t, const RootSystem& rs);
Json to_json(const FoldReport& r);

/// Inverse of to_json(ExchangeMatrix).
ExchangeMatrix matrix_from_json(const Json& j);

}  // namespace clusteraut
