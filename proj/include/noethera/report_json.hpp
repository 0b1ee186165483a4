#pragma once

#include <json.hpp>

#include "noethera/local_structure.hpp"
#include "noethera/rank_engine.hpp"

namespace noethera {

nlohmann::json to_json(const RankValue& v);
nlohmann::json to_json(const BoundsReport& b);
nlohmann::json to_json(const RankReport& r);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const PolynomialReport& p);
nlohmann::json to_json(const FiniteRing& ring, const IdealSet& ideal);
nlohmann::json to_json(const HilbertFunction& h);

/// Idempotents, factor presentations, factor sizes and residue field sizes.
nlohmann::json decomposition_json(const FiniteRing& ring, const LocalDecomposition& d);

}  // namespace noethera
