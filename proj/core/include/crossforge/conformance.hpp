#pragma once

#include <nlohmann/json.hpp>

#include "crossforge/closed_forms.hpp"
#include "crossforge/layer_count.hpp"
#include "crossforge/schedules.hpp"

namespace crossforge {

/// The reading chosen for each ambiguous construction step.
struct Interpretations {
  AlternationReading alternation = AlternationReading::LayerParity;
  ClauseReading clauses = ClauseReading::Repaired;
  WindingRule winding = WindingRule::Unidirectional;
  SignReading sign = SignReading::ExponentS;
};

/// The frozen defaults (what conformance/interpretations.json records).
Interpretations default_interpretations();

/// Re-derives the evidence behind every default: per candidate reading, how
/// many grid cells close / stay bijective / match the oracle. Deterministic.
nlohmann::ordered_json conformance_document();

/// Reads the "defaults" block of a conformance document.
Interpretations parse_interpretations(const nlohmann::json& doc);

}  // namespace crossforge
