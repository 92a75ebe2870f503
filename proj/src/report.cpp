#include "lienil/report.hpp"

namespace lienil::report {

namespace {

json modes_json(const std::vector<ModeVerdict>& verdicts) {
  json out = json::array();
  for (const auto& v : verdicts) {
    json defects = json::array();
    for (const auto& d : v.witness) defects.push_back({{"shape", d.shape}, {"excess", d.excess}});
    out.push_back({{"mode", v.mode.tag()},
                   {"is_null", v.is_null},
                   {"ideal_dimension", v.ideal_dimension},
                   {"escaping_blocks", defects}});
  }
  return out;
}

}  // namespace

json weights_json(const WeightTable& table) {
  json entries = json::array();
  for (const auto& [nu, m] : table.entries) entries.push_back({{"weight", nu.exponents()}, {"multiplicity", m}});
  return {{"n", table.n}, {"max_degree", table.max_degree}, {"entries", entries}, {"total", table.total()}};
}

json lambda_dim_json(const LambdaDim& dim) {
  return {{"dimension", dim.dimension},
          {"stabilized", dim.stabilized},
          {"max_degree", dim.max_degree},
          {"window", dim.window},
          {"top_degree", dim.top_degree}};
}

json hilbert_json(int n, int i, const HilbertSeries& series, const WeightTable& lambda, ScalarMode mode) {
  return {{"n", n},
          {"i", i},
          {"mode", mode.tag()},
          {"max_degree", series.max_degree},
          {"series", series.coefficients},
          {"lambda_by_degree", lambda.by_degree()},
          {"lambda_weights", weights_json(lambda)},
          {"lambda", lambda_dim_json(lambda_dim_of(lambda, i))}};
}

json pair_json(const PairReport& r) {
  json j = {{"m", r.m},
            {"l", r.l},
            {"is_null", r.is_null},
            {"consensus", r.consensus},
            {"method", r.method},
            {"component_dimension", r.component_dimension},
            {"spanning_shapes", r.spanning_shapes},
            {"parity_prediction", r.parity_prediction()},
            {"agrees_with_parity", r.is_null == r.parity_prediction()},
            {"verdicts", modes_json(r.verdicts)}};
  if (!r.shortcut.empty()) j["shortcut"] = r.shortcut;
  return j;
}

json scan_json(const ScanReport& s) {
  json pairs = json::array();
  for (const auto& p : s.pairs) pairs.push_back(pair_json(p));
  auto list = [](const std::vector<std::pair<int, int>>& v) {
    json a = json::array();
    for (const auto& [m, l] : v) a.push_back({m, l});
    return a;
  };
  return {{"max_sum", s.max_sum},
          {"pairs", pairs},
          {"not_null", list(s.not_null)},
          {"parity_disagreements", list(s.disagreements)},
          {"consensus", s.consensus}};
}

json containment_json(const ContainmentReport& r) {
  json j = {{"holds", r.holds},
            {"target", r.target},
            {"products", r.products},
            {"splits", r.splits},
            {"method", r.method}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

json presentation_json(const PresentationReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"delta", rec.delta.exponents()},
                       {"dim_component", rec.dim_component},
                       {"rank_ideal", rec.rank_ideal},
                       {"rank_M", rec.rank_m},
                       {"equal", rec.equal}});
  }
  json j = {{"n", r.n},
            {"i", r.i},
            {"max_degree", r.max_degree},
            {"mode", r.mode.tag()},
            {"relation_counts", r.relation_counts},
            {"sound", r.sound},
            {"records", records},
            {"passed", r.passed},
            {"statement", r.statement}};
  if (r.dropped_family) j["dropped_family"] = *r.dropped_family;
  if (r.unsound_relation) j["unsound_relation"] = *r.unsound_relation;
  if (r.first_failure) j["first_failure"] = r.first_failure->exponents();
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

json fs_json(const FsReport& r) {
  json j = {{"n", r.n},
            {"max_degree", r.max_degree},
            {"mode", r.mode.tag()},
            {"triples", r.triples},
            {"associative", r.associative},
            {"relations", r.relations},
            {"relations_hold", r.relations_hold},
            {"star_commutator_is_2dx", r.commutator_ok},
            {"form_dimensions", r.form_dimensions},
            {"q_dimensions", r.q_dimensions},
            {"dimensions_match", r.dimensions_match},
            {"passed", r.passed}};
  if (r.associativity_witness) j["associativity_witness"] = *r.associativity_witness;
  if (r.relation_witness) j["relation_witness"] = *r.relation_witness;
  return j;
}

json decomposition_json(const SchurDecomposition& d) {
  json terms = json::array();
  for (const auto& [lam, m] : d.multiplicities) terms.push_back({{"partition", lam.parts()}, {"multiplicity", m}});
  return {{"terms", terms}, {"text", d.to_string()}};
}

json corollary_json(const CorollaryReport& r) {
  return {{"n", r.n},
          {"max_degree", r.kernel.max_degree},
          {"kernel_weights", weights_json(r.kernel.weights)},
          {"lambda_upper", lambda_dim_json(r.kernel.upper)},
          {"lambda_lower", lambda_dim_json(r.kernel.lower)},
          {"decomposition", decomposition_json(r.decomposition)},
          {"expected", decomposition_json(r.expected)},
          {"passed", r.passed}};
}

json pair_timing(const PairReport& r) {
  json per_mode = json::object();
  for (const auto& v : r.verdicts) per_mode[v.mode.tag()] = v.seconds;
  return {{"elapsed_seconds", r.elapsed_seconds}, {"per_mode_seconds", per_mode}};
}

json scan_timing(const ScanReport& s) {
  json pairs = json::object();
  double total = 0;
  for (const auto& p : s.pairs) {
    pairs[std::to_string(p.m) + "," + std::to_string(p.l)] = p.elapsed_seconds;
    total += p.elapsed_seconds;
  }
  return {{"elapsed_seconds", total}, {"per_pair_seconds", pairs}};
}

json envelope(const std::string& command, json result, json timing) {
  return {{"command", command}, {"result", std::move(result)}, {"timing", std::move(timing)}};
}

}  // namespace lienil::report
