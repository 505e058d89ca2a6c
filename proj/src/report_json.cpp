#include "mcf/report_json.hpp"

#include "mcf/pts_io.hpp"

namespace mcf {

using nlohmann::json;

json rational_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}, {"approx", r.decimal(6)}}; }

json to_json(const SaturationReport& r) {
  json j = {{"field", r.field},
            {"q", r.q},
            {"N", r.N},
            {"n", r.n},
            {"mu_required", r.mu_required},
            {"m1", r.m1},
            {"m2", r.m2},
            {"m3", r.m3},
            {"saturating", r.saturating()},
            {"mu", r.mu},
            {"coverage_min", r.coverage_min},
            {"coverage_max", r.coverage_max},
            {"coverage_sum", r.coverage_sum},
            {"b3", r.b3},
            {"minimal", r.minimal},
            {"optimal", r.optimal},
            {"counting_mode", to_string(r.counting_mode)}};
  j["gamma"] = r.gamma ? rational_json(*r.gamma) : json(nullptr);
  return j;
}

json to_json(const constructions::ConstructionResult& r, const Space& space) {
  json j = {{"name", r.name},
            {"parameters", r.parameters},
            {"field", space.field().descriptor()},
            {"N", space.dim()},
            {"q", space.q()},
            {"n", r.point_set.size()},
            {"claimed_n", r.claimed_n},
            {"claimed_mu", r.claimed_mu},
            {"mu_exact", r.mu_exact},
            {"claimed_kind", constructions::to_string(r.claimed_kind)},
            {"counting_mode", to_string(r.mode)},
            {"verified", r.verified},
            {"discrepancies", r.discrepancies},
            {"report", to_json(r.report)}};
  j["claimed_gamma"] = r.claimed_gamma ? rational_json(*r.claimed_gamma) : json(nullptr);
  j["gamma_upper_bound"] = r.gamma_upper_bound ? rational_json(*r.gamma_upper_bound) : json(nullptr);
  j["claimed_minimal"] = r.claimed_minimal ? json(*r.claimed_minimal) : json(nullptr);
  j["claimed_distance"] = r.claimed_distance ? json(*r.claimed_distance) : json(nullptr);
  j["minimum_distance"] = r.minimum_distance ? json(*r.minimum_distance) : json(nullptr);
  if (r.size_bound) j["size_bound"] = {{"constant", r.size_bound->first}, {"sqrt_q_coefficient", r.size_bound->second}};
  j["points"] = format_pts(space, r.point_set);
  return j;
}

json to_json(const singer::SingerPartition& p) {
  return {{"q", p.q}, {"t", p.t}, {"d", p.d}, {"weights", p.weights}, {"weight_class", singer::weight_class(p.weights)}};
}

json to_json(const singer::BdcEvaluation& e) {
  json j = {{"t", e.t}, {"m", e.m}, {"q", e.q}, {"d", e.d}, {"set_size", e.set_size}, {"mu", e.mu}, {"N_values", e.N_values}};
  j["gamma"] = e.gamma ? rational_json(*e.gamma) : json(nullptr);
  return j;
}

json to_json(const classify::Spectrum& s) {
  json counts = json::object();
  for (auto [n, c] : s.counts) counts[std::to_string(n)] = c;
  json classes = json::array();
  for (const auto& c : s.classes)
    classes.push_back({{"n", c.n},
                       {"mask", c.mask.hex()},
                       {"points", c.canonical.indices()},
                       {"stabilizer_order", c.stabilizer_order},
                       {"orbit_size", c.orbit_size},
                       {"minimal", c.minimal},
                       {"optimal", c.optimal},
                       {"coverage_min", c.coverage_min},
                       {"coverage_max", c.coverage_max}});
  return {{"q", s.q},
          {"mu", s.mu},
          {"predicate", classify::to_string(s.predicate)},
          {"min_size", s.min_size},
          {"max_size", s.max_size},
          {"complete", s.complete},
          {"group_order", classify::collineation_group_order(s.q)},
          {"counts", counts},
          {"classes", classes}};
}

json to_json(const bounds::BoundReport& b) {
  json sec = json::array();
  for (const auto& s : b.secant_lower) sec.push_back({{"r", s.r}, {"s", s.s}, {"k_min", s.value}});
  json j = {{"q", b.q},
            {"mu", b.mu},
            {"mu_max", b.mu_max},
            {"length_lower_trivial", {{"value", b.length_lower_trivial}, {"condition", "none"}}},
            {"length_upper_probabilistic",
             {{"value", b.probabilistic.value ? json(*b.probabilistic.value) : json(nullptr)},
              {"condition", "mu < 121 q ln q"},
              {"applies_ln", b.probabilistic.applies_ln},
              {"applies_log2", b.probabilistic.applies_log2}}},
            {"baer_upper",
             {{"value", b.baer_upper ? json(*b.baer_upper) : json(nullptr)}, {"condition", "q a square"}}},
            {"secant_lower", sec},
            {"notes", b.notes}};
  j["size_upper"] = {{"value", b.size_upper ? json(*b.size_upper) : json(nullptr)},
                     {"condition", "minimal sets, mu <= (q+1)C(q,2)"}};
  return j;
}

}  // namespace mcf
