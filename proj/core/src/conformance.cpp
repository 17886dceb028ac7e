#include "crossforge/conformance.hpp"

#include "crossforge/cap_search.hpp"

namespace crossforge {

Interpretations default_interpretations() { return {}; }

namespace {

constexpr int kMaxM = 20;
constexpr int kOddN[] = {3, 5, 7, 9};

std::int64_t formula_total(const ScheduleAssignment& s) {
  std::int64_t total = 0;
  for (const auto& f : s.per_layer) total += sector_crossings_formula(f);
  return total;
}

nlohmann::ordered_json alternation_evidence() {
  nlohmann::ordered_json j;
  for (auto reading : {AlternationReading::LayerParity, AlternationReading::BlockOffset}) {
    int cells = 0, closes = 0, totals_match = 0;
    for (int n : kOddN) {
      for (int m = n + 1; m <= kMaxM; ++m) {
        const auto s = schedule_for(m, n, Family::Cycle, reading);
        ++cells;
        closes += schedule_closes(s) ? 1 : 0;
        totals_match += ExactValue(formula_total(s)) == nu_cycle_drawing(m, n) ? 1 : 0;
      }
    }
    j[to_string(reading)] = {{"cells", cells}, {"closes", closes}, {"totals_match", totals_match}};
  }
  return j;
}

nlohmann::ordered_json clause_evidence() {
  nlohmann::ordered_json j;
  for (auto reading : {ClauseReading::Repaired, ClauseReading::AsPrinted}) {
    int cells = 0, ok = 0;
    for (int n : kOddN) {
      for (int m = n + 1; m <= kMaxM; ++m) {
        for (int l = 4; l <= 8; ++l) {
          if (!is_admissible(l, m, n)) continue;
          ++cells;
          try {
            extended_permutation(l, m, n, reading);
            ++ok;
          } catch (const ClauseError&) {
          } catch (const NotABijection&) {
          }
        }
      }
    }
    j[to_string(reading)] = {{"admissible_cells", cells}, {"bijective", ok}};
  }
  return j;
}

nlohmann::ordered_json sign_evidence() {
  nlohmann::ordered_json j;
  for (auto reading : {SignReading::ExponentS, SignReading::ExponentProduct, SignReading::Literal}) {
    int cells = 0, match = 0;
    for (int n : kOddN) {
      for (int m = n + 1; m <= kMaxM; ++m) {
        ++cells;
        const auto total = formula_total(schedule_for(m, n));
        match += large_m_closed(m, n, reading) == ExactValue(total) ? 1 : 0;
      }
    }
    j[to_string(reading)] = {{"cells", cells}, {"match", match}};
  }
  return j;
}

nlohmann::ordered_json winding_evidence() {
  nlohmann::ordered_json j;
  for (auto rule : {WindingRule::Unidirectional, WindingRule::ShortestTiePositive,
                    WindingRule::ShortestTieSourceParity}) {
    int match = 0;
    for (int m = 4; m <= 12; ++m) {
      const std::int64_t expected = static_cast<std::int64_t>(m) * (m - 1) * (m - 2) * (m - 3) / 6;
      match += annulus_crossings(m, rule) == expected ? 1 : 0;
    }
    j[to_string(rule)] = {{"cells", 9}, {"match", match}};
  }
  return j;
}

}  // namespace

nlohmann::ordered_json conformance_document() {
  const Interpretations d = default_interpretations();
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["defaults"] = {{"alternation", to_string(d.alternation)},
                     {"clauses", to_string(d.clauses)},
                     {"winding", to_string(d.winding)},
                     {"sign", to_string(d.sign)}};
  nlohmann::ordered_json ev;
  ev["grid"] = {{"m_max", kMaxM}, {"odd_n", kOddN}};
  ev["alternation"] = alternation_evidence();
  ev["clauses"] = clause_evidence();
  ev["sign"] = sign_evidence();
  ev["winding"] = winding_evidence();
  ev["cap_search"] = {{"4", cap_route_search(4).crossings}, {"5", cap_route_search(5).crossings}};
  doc["evidence"] = ev;
  return doc;
}

Interpretations parse_interpretations(const nlohmann::json& doc) {
  const auto& d = doc.at("defaults");
  Interpretations out;
  out.alternation = parse_alternation_reading(d.at("alternation").get<std::string>());
  out.clauses = parse_clause_reading(d.at("clauses").get<std::string>());
  out.winding = parse_winding_rule(d.at("winding").get<std::string>());
  out.sign = parse_sign_reading(d.at("sign").get<std::string>());
  return out;
}

}  // namespace crossforge
