#include "modkernel/report_json.h"

namespace modkernel {

Json to_json(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

Json to_json(const Half& h) {
  if (h.is_integer()) return Json(h.twice() / 2);
  return Json(h.to_string());
}

Json to_json(const HalfIntegralSolution& sol) {
  Json out;
  out["sense"] = sol.sense() == LpSense::kVertexCover ? "vc" : "is";
  out["value"] = to_json(sol.value());
  out["ones"] = to_json(sol.ones());
  out["halves"] = to_json(sol.halves());
  out["zeros"] = to_json(sol.zeros());
  Json assignment = Json::array();
  auto labels = sol.labels();
  auto twice = sol.twice_values();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    assignment.push_back({{"vertex", labels[i]}, {"value", to_json(Half::from_twice(twice[i]))}});
  }
  out["assignment"] = std::move(assignment);
  return out;
}

Json to_json(const BlockingSetReport& report) {
  Json out;
  out["host"] = to_json(report.host.vertex_set());
  out["minimal_sets"] = Json::array();
  for (const auto& s : report.minimal_sets) out["minimal_sets"].push_back(to_json(s));
  out["max_minimal_size"] = report.max_minimal_size;
  out["class_bound"] = report.class_bound;
  out["bound_respected"] = report.bound_respected;
  return out;
}

Json to_json(const GapReport& gap) {
  Json out;
  out["solved"] = gap.solved;
  out["vc_target"] = gap.vc_target;
  out["vc_remainder"] = gap.vc_remainder;
  if (gap.solved) {
    out["cover"] = to_json(gap.cover);
  } else {
    out["lp_vc"] = to_json(gap.lp_vc);
    out["gap"] = to_json(gap.gap);
  }
  out["bound"] = gap.bound;
  out["audited_bound"] = gap.audited_bound;
  out["bound_respected"] = gap.bound_respected;
  return out;
}

namespace {

Json to_json(const ConflictCheck& check) {
  return Json{{"x_i", to_json(check.x_i)},
              {"conf_component", check.conf_component},
              {"conf_rest", check.conf_rest}};
}

}  // namespace

Json to_json(const KernelReport& report) {
  Json out;
  out["status"] = report.status;
  out["class"] = std::string(to_string(report.cls));
  out["d"] = report.d;
  out["budget"] = report.budget;
  out["n_before"] = report.n_before;
  out["n_after"] = report.n_after;
  out["k_before"] = report.k_before;
  out["k_after"] = report.k_after;
  out["components_before"] = report.components_before;
  out["components_after"] = report.components_after;
  out["component_bound"] = report.component_bound;
  out["modulator_before"] = report.modulator_before;
  out["modulator_after"] = report.modulator_after;
  out["modulator_bound"] = report.modulator_bound;
  out["added_to_modulator"] = to_json(report.added_to_modulator);

  Json deleted = Json::array();
  for (const auto& rec : report.deleted_components) {
    Json checks = Json::array();
    for (const auto& c : rec.checks) checks.push_back(to_json(c));
    deleted.push_back({{"component", to_json(rec.component)},
                       {"alpha_credit", rec.alpha_credit},
                       {"checks", std::move(checks)}});
  }
  out["deleted_components"] = std::move(deleted);

  Json surviving = Json::array();
  for (const auto& rec : report.surviving_components) {
    surviving.push_back({{"component", to_json(rec.component)},
                         {"certificate", to_json(rec.certificate)},
                         {"components_sharing_certificate", rec.components_sharing_certificate}});
  }
  out["surviving_components"] = std::move(surviving);
  out["above_lp_gap"] = report.above_lp_gap ? to_json(*report.above_lp_gap) : Json(nullptr);
  out["label_map"] = report.label_map;
  out["checks"] = {{"component_bound", report.checks.component_bound},
                   {"certificate_audit", report.checks.certificate_audit},
                   {"modulator_bound", report.checks.modulator_bound},
                   {"remainder_in_target_class", report.checks.remainder_in_target_class},
                   {"gap_bound", report.checks.gap_bound}};
  return out;
}

}  // namespace modkernel
