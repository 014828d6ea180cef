#include "twoconn_cli/json_io.hpp"

#include <charconv>
#include <cmath>

namespace twoconn::cli {

std::string decimal(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string decimal(std::int64_t value) { return std::to_string(value); }

Json to_json(const ModelParams& p) {
  Json j;
  j["n"] = decimal(p.n);
  j["m"] = decimal(p.m);
  j["c"] = decimal(p.c);
  j["r"] = decimal(p.r);
  j["lambda_c"] = decimal(p.lambda_c);
  j["eta_bar"] = decimal(p.eta_bar);
  j["p_c"] = decimal(p.p_c);
  j["delta"] = decimal(p.delta);
  j["p_a"] = decimal(p.p_a);
  return j;
}

Json to_json(const CountEstimate& e) {
  Json j;
  j["formula"] = std::string(regime_name(e.regime == Regime::kCaseB ? Regime::kMain : e.regime));
  j["n"] = decimal(e.params.n);
  j["m"] = decimal(e.params.m);
  j["log_count"] = decimal(e.log_value());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", e.log10_value());
  j["log10_count"] = buf;
  j["count"] = e.log_count.to_scientific(6);
  Json breakdown = Json::object();
  for (const auto& [name, value] : e.breakdown) breakdown[name] = decimal(value);
  j["breakdown"] = breakdown;
  if (e.params.lambda_c > 0) j["params"] = to_json(e.params);
  return j;
}

Json to_json(const Estimate& e) {
  Json j;
  j["statistic"] = e.statistic;
  j["value"] = decimal(e.value);
  j["std_error"] = decimal(e.std_error);
  j["samples"] = decimal(e.samples);
  j["seed"] = std::to_string(e.seed);
  return j;
}

Json to_json(const XyzSummary& s, bool per_sample) {
  Json j;
  j["mode"] = std::string(xyz_mode_name(s.mode));
  j["mean_x"] = to_json(s.mean_x);
  j["mean_y"] = to_json(s.mean_y);
  j["mean_z"] = to_json(s.mean_z);
  j["mean_x_plus_y"] = to_json(s.mean_x_plus_y);
  j["falling2_x_plus_y"] = to_json(s.falling2_x_plus_y);
  if (s.mode == XyzMode::kSection8) j["mean_x_plus_y_plus_z"] = to_json(s.mean_x_plus_y_plus_z);
  if (per_sample) {
    Json rows = Json::array();
    for (const auto& x : s.per_sample) rows.push_back({x.x, x.y, x.z});
    j["per_sample"] = rows;
  }
  return j;
}

Json to_json(const KernelShapeSummary& s) {
  Json j;
  j["mean_kernel_edges"] = to_json(s.mean_kernel_edges);
  j["mean_d3_fraction"] = to_json(s.mean_d3_fraction);
  j["empty_edge_rate"] = to_json(s.empty_edge_rate);
  j["target_kernel_edges"] = decimal(s.target_kernel_edges);
  j["target_d3_fraction"] = decimal(s.target_d3_fraction);
  j["target_empty_rate"] = decimal(s.target_empty_rate);
  return j;
}

Json to_json(const TypicalityReport& r) {
  Json j;
  j["regime"] = r.regime == TypicalRegime::kA ? "a" : "b";
  j["member"] = r.member;
  j["epsilon"] = decimal(r.epsilon);
  j["psi"] = decimal(r.psi);
  j["violations"] = r.violations;
  Json measured = Json::object();
  for (const auto& [k, v] : r.measured) measured[k] = decimal(v);
  j["measured"] = measured;
  Json targets = Json::object();
  for (const auto& [k, v] : r.targets) targets[k] = decimal(v);
  j["targets"] = targets;
  j["notes"] = r.notes;
  return j;
}

}  // namespace twoconn::cli
