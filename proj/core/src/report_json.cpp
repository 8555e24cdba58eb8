#include "ks/report_json.hpp"

namespace ks {

using nlohmann::json;

json rational_json(const Rational& q) { return to_string(q); }

json to_json(const ClassificationReport& r) {
  return json{
      {"schema", kReportSchema},
      {"n", r.n},
      {"alpha", r.alpha},
      {"omega", r.omega},
      {"chi", r.chi},
      {"theta", r.theta},
      {"theta_gap", r.theta_gap},
      {"alpha_star", r.alpha_star ? rational_json(*r.alpha_star) : json(nullptr)},
      {"vertex_transitive", r.vertex_transitive},
      {"fully_contextual", r.fully_contextual},
      {"max_clique_count", r.max_clique_count},
      {"per_vertex_clique_counts", r.per_vertex_clique_counts},
      {"parity_proof", r.parity_proof},
      {"symmetric_parity", r.symmetric_parity},
  };
}

json to_json(const ThetaResult& r) {
  return json{
      {"schema", kReportSchema},
      {"value", r.value},
      {"dual_value", r.dual_value},
      {"duality_gap", r.duality_gap},
      {"iterations", r.iterations},
  };
}

json to_json(const InequalityReport& r) {
  json samples = json::array();
  for (const auto& [seed, value] : r.state_samples) samples.push_back({{"seed", seed}, {"s", value}});
  return json{
      {"schema", kReportSchema},
      {"classical_max", r.classical_max},
      {"classical_maximizer_count", r.classical_maximizer_count},
      {"classical_maximizer", r.classical_maximizer},
      {"quantum_value", r.quantum_value ? rational_json(*r.quantum_value) : json(nullptr)},
      {"per_context_product_is_minus_identity", r.per_context_product_is_minus_identity},
      {"maximally_mixed_value", r.maximally_mixed_value},
      {"state_samples", samples},
  };
}

json to_json(const JohnsonDimBound& b) {
  return json{
      {"schema", kReportSchema},
      {"k", b.k},
      {"block_count", b.block_count},
      {"inequality_count", b.inequality_count},
      {"rank_sum_lower", b.rank_sum_lower},
      {"base_capacity", b.base_capacity},
      {"extra_row_weight", b.extra_row_weight},
      {"min_extra_rows", b.min_extra_rows},
      {"min_dimension", b.min_dimension},
      {"excluded_dimensions", b.excluded_dimensions},
  };
}

json to_json(const ThreeCliqueCheck& c) {
  return json{
      {"schema", kReportSchema},
      {"n", c.n},
      {"omega", c.omega},
      {"incidence_needed", c.incidence_needed},
      {"incidence_available", c.incidence_available},
      {"ceiling", rational_json(c.ceiling)},
      {"feasible", c.feasible},
      {"violated", c.violated},
  };
}

json to_json(const ContextSetReport& r) {
  return json{
      {"dimension", r.dimension},
      {"rays", r.ray_count},
      {"contexts", r.context_count},
      {"multiplicity", r.multiplicity},
      {"pairwise_sharing", r.pairwise_sharing},
  };
}

json to_json(const CensusRow& row) {
  json pfcvt = json::array();
  for (const auto& [cliques, count] : row.pfcvt_by_clique_count) {
    pfcvt.push_back({{"max_cliques", cliques}, {"count", count}});
  }
  return json{{"n", row.n}, {"fcvt", row.fcvt}, {"pfcvt", pfcvt}};
}

}  // namespace ks
