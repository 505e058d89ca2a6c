#pragma once

#include <json.hpp>

#include "mcf/bounds.hpp"
#include "mcf/classify.hpp"
#include "mcf/constructions.hpp"
#include "mcf/rational.hpp"
#include "mcf/saturate.hpp"
#include "mcf/singer.hpp"

namespace mcf {

// {"num", "den", "approx"}
nlohmann::json rational_json(const Rational& r);

nlohmann::json to_json(const SaturationReport& r);
nlohmann::json to_json(const constructions::ConstructionResult& r, const Space& space);
nlohmann::json to_json(const singer::SingerPartition& p);
nlohmann::json to_json(const singer::BdcEvaluation& e);
nlohmann::json to_json(const classify::Spectrum& s);
nlohmann::json to_json(const bounds::BoundReport& b);

}  // namespace mcf
