#include "bicyclic/report.hpp"

#include <algorithm>
#include <sstream>

namespace bicyclic {

using nlohmann::json;

namespace {

json elements_json(const ElementSet& s) {
  json a = json::array();
  for (Elem e : to_vector(s)) a.push_back(e);
  return a;
}

void render(std::ostringstream& o, const json& j, int indent) {
  const std::string pad(std::size_t(indent) * 2, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const json& v = it.value();
      if (v.is_structured() && !v.empty()) {
        o << pad << it.key() << ":\n";
        render(o, v, indent + 1);
      } else {
        o << pad << it.key() << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
    if (flat) {
      o << pad << j.dump() << "\n";
      return;
    }
    for (std::size_t k = 0; k < j.size(); ++k) {
      o << pad << "- [" << k << "]\n";
      render(o, j[k], indent + 1);
    }
  } else {
    o << pad << j.dump() << "\n";
  }
}

}  // namespace

json to_json(const InvariantRecord& r) {
  return {{"order", r.order},
          {"center_size", r.center_size},
          {"derived_series_sizes", r.derived_series_sizes},
          {"lower_central_sizes", r.lower_central_sizes},
          {"frattini_size", r.frattini_size},
          {"omega_sizes", r.omega_sizes},
          {"agemo_sizes", r.agemo_sizes},
          {"rank", r.rank},
          {"two_rank", r.two_rank},
          {"exponent", r.exponent},
          {"nilpotency_class", r.nilpotency_class},
          {"derived_is_cyclic", r.derived_is_cyclic}};
}

json to_json(const ShapeTags& t) {
  json j = {{"abelian", t.abelian},
            {"cyclic", t.cyclic},
            {"homocyclic", t.homocyclic},
            {"elementary_abelian", t.elementary_abelian},
            {"dihedral", t.dihedral},
            {"semidihedral", t.semidihedral},
            {"quaternion", t.quaternion},
            {"maximal_class", t.maximal_class},
            {"metacyclic", t.metacyclic},
            {"bicyclic", t.bicyclic},
            {"wreath_C2n_C2", t.wreath_C2n_C2}};
  j["min_nonabelian"] = t.min_nonabelian ? json::array({t.min_nonabelian->first, t.min_nonabelian->second}) : json();
  return j;
}

json to_json(const Fingerprint& f) {
  json eo = json::array();
  for (auto [o, c] : f.element_orders) eo.push_back({o, c});
  return {{"digest", f.digest()}, {"order", f.order}, {"element_orders", eo}, {"center_size", f.center_size},
          {"derived_series_sizes", f.derived_series_sizes}};
}

json to_json(const EssentialReport& e) {
  json j = {{"representative", elements_json(e.class_rep.mask())},
            {"order", e.class_rep.order()},
            {"class_size", e.class_size},
            {"rank", e.rank_of_q},
            {"normal_in_p", e.is_normal_in_p},
            {"conditions",
             {{"self_centralizing", e.conditions.self_centralizing},
              {"norm_index_two", e.conditions.norm_index_two},
              {"faithful_on_frattini_quotient", e.conditions.faithful_on_frattini_quotient},
              {"s3_realizable", e.conditions.s3_realizable},
              {"s3_evaluated", e.conditions.s3_evaluated}}},
            {"candidate", e.candidate()},
            {"iso_type", to_string(e.iso_type)},
            {"normalizer_type", to_string(e.normalizer_type)}};
  if (e.alpha_witness) j["alpha_witness"] = *e.alpha_witness;
  return j;
}

json to_json(const FusionVerdict& v) {
  json cands = json::array();
  for (const auto& e : v.candidate_classes) cands.push_back(to_json(e));
  json j = {{"admits_nonnilpotent", v.admits_nonnilpotent},
            {"reason", to_string(v.reason)},
            {"candidate_classes", cands},
            {"fs_count", v.fs_count},
            {"aut_order", v.aut_order},
            {"aut_is_2_group", v.aut_is_2_group}};
  if (v.matched_case) {
    j["matched_case"] = {{"case", v.matched_case->case_id}};
    if (v.matched_case->spec) j["matched_case"]["spec"] = describe(*v.matched_case->spec);
  }
  if (!v.center_candidates.empty()) {
    json cc = json::array();
    for (const auto& c : v.center_candidates) cc.push_back({{"element", c.element}, {"is_square", c.is_square}});
    j["center_candidates"] = cc;
  }
  return j;
}

json to_json(const StructuralCheck& s) {
  return {{"check", s.check}, {"class_index", s.class_index}, {"passed", s.passed}, {"detail", s.detail}};
}

json to_json(const CensusRecord& r) {
  json j = {{"log_order", r.log_order},
            {"index", r.index},
            {"fingerprint", r.fingerprint.digest()},
            {"shape", to_json(r.shape)},
            {"derived_cyclic", r.derived_cyclic},
            {"matched_family", r.matched_family ? json(describe(*r.matched_family)) : json()},
            {"admits_nonnilpotent", r.verdict.admits_nonnilpotent},
            {"fs_count", r.verdict.fs_count},
            {"candidate_classes", r.verdict.candidate_classes.size()},
            {"aut_order", r.verdict.aut_order}};
  if (r.verdict.matched_case) j["case"] = r.verdict.matched_case->case_id;
  if (!r.errors.empty()) j["errors"] = r.errors;
  return j;
}

json to_json(const CountRow& r) {
  return {{"N", r.N}, {"f_empirical", r.f_empirical}, {"f_formula", r.f_formula},
          {"g_empirical", r.g_empirical}, {"g_formula", r.g_formula}};
}

json to_json(const Violation& v) { return {{"check", v.check}, {"subject", v.subject}, {"detail", v.detail}}; }

json to_json(const ExponentFormula& e) {
  return {{"family", to_string(e.family)}, {"param", e.param}, {"value", e.value.str()}, {"is_divisor", e.is_divisor}};
}

json to_json(const SectionBoundReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"r", row.r},
                    {"largest_allowed", row.largest_allowed},
                    {"largest_unobstructed", row.largest_unobstructed ? json(*row.largest_unobstructed) : json()}});
  return {{"family", to_string(r.family)}, {"r_max", r.r_max}, {"rows", rows}, {"failures", r.failures},
          {"bounds_tight", r.bounds_tight}};
}

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::kPass: return "pass";
    case ReportStatus::kFail: return "fail";
    case ReportStatus::kError: return "error";
  }
  return "error";
}

json ReportEnvelope::to_json() const {
  return {{"schema", "bicyclic-report"},
          {"schema_version", kReportSchemaVersion},
          {"command", command},
          {"inputs", inputs},
          {"results", results},
          {"violations", violations},
          {"status", to_string(status)},
          {"timing", {{"seconds", seconds}}}};
}

std::string render_text(const ReportEnvelope& env) {
  std::ostringstream o;
  o << "command: " << env.command << "\nstatus: " << to_string(env.status) << "\n";
  if (!env.inputs.empty()) {
    o << "inputs:\n";
    render(o, env.inputs, 1);
  }
  o << "results:\n";
  render(o, env.results, 1);
  o << "violations: " << env.violations.size() << "\n";
  for (const json& v : env.violations) render(o, v, 1);
  return o.str();
}

}  // namespace bicyclic
