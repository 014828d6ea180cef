#include "twoconn_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twoconn/error.hpp"
#include "twoconn/formulas.hpp"
#include "twoconn/mc.hpp"
#include "twoconn/models.hpp"
#include "twoconn/multigraph.hpp"
#include "twoconn/numeric.hpp"
#include "twoconn/oracle.hpp"
#include "twoconn_cli/json_io.hpp"

namespace twoconn::cli {
namespace {

constexpr const char* kDescription =
    "Asymptotic, exact and Monte Carlo counts of 2-connected, 2-edge-connected and\n"
    "minimum-degree-2 labelled graphs.\n\n"
    "count asymptotic --regime auto picks a for c < 2.2, c for c > 30 and main otherwise;\n"
    "main is valid for every c > 2.";

struct Options {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::string regime = "auto";
  std::string predicate;
  std::string file;
  std::string degrees_file;
  std::string kind;
  std::string model;
  std::string event;
  std::string mode;
  std::string sweep;
  std::uint64_t seed = 1;
  std::int64_t samples = 1000;
  std::int64_t max_tries = kDefaultMaxTries;
  double epsilon = 0.1;
  int threads = 1;
  bool conditioned = false;
  bool allow_nine = false;
  bool per_sample = false;
};

DegreeSequence load_degrees(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open degree file: " + path);
  return read_degree_sequence(in);
}

Regime parse_regime(const std::string& name, double c) {
  if (name == "auto") return auto_regime(c);
  if (name == "main") return Regime::kMain;
  if (name == "a") return Regime::kCaseA;
  if (name == "b") return Regime::kCaseB;
  if (name == "c") return Regime::kCaseC;
  if (name == "two-edge") return Regime::kTwoEdge;
  if (name == "wright") return Regime::kWright;
  if (name == "mindeg2") return Regime::kMinDeg2;
  throw DomainError("unknown regime: " + name);
}

DegSeqRegime parse_degseq_regime(const std::string& name) {
  if (name == "a") return DegSeqRegime::kA;
  if (name == "b") return DegSeqRegime::kB;
  if (name == "c") return DegSeqRegime::kC;
  throw DomainError("unknown degree-sequence regime: " + name);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

SampleSpec sample_spec(const Options& o, Model model) {
  if (!o.degrees_file.empty()) {
    SampleSpec spec = SampleSpec::fixed(model, load_degrees(o.degrees_file));
    spec.max_tries = o.max_tries;
    return spec;
  }
  if (o.n <= 0 || o.m <= 0) throw DomainError("give either --degrees or both --n and --m");
  SampleSpec spec = SampleSpec::conditioned(model, o.n, o.m);
  spec.max_tries = o.max_tries;
  return spec;
}

Json spec_json(const SampleSpec& spec) {
  Json j;
  j["model"] = std::string(model_name(spec.model));
  j["n"] = decimal(spec.n);
  j["m"] = decimal(spec.m);
  j["conditioned"] = !spec.degrees.has_value();
  return j;
}

RunOptions run_options(const Options& o) {
  RunOptions r;
  r.samples = o.samples;
  r.seed = o.seed;
  r.threads = o.threads;
  return r;
}

std::string edge_list_text(const Multigraph& g) {
  std::ostringstream s;
  write_edge_list(s, g);
  return s.str();
}

void cmd_params(const Options& o, std::ostream& out) { emit(out, to_json(derive_params(o.n, o.m))); }

void cmd_count_asymptotic(const Options& o, std::ostream& out) {
  const ModelParams p = derive_params(o.n, o.m);
  emit(out, to_json(log_count(p, parse_regime(o.regime, p.c))));
}

void cmd_count_exact(const Options& o, std::ostream& out) {
  if (o.n > 64 || o.m > 4096) throw LimitError("n outside the exact-count guard");
  const Predicate pred = parse_predicate(o.predicate);
  const BigInt count = exact_count(static_cast<int>(o.n), static_cast<int>(o.m), pred, o.allow_nine, o.threads);
  Json j;
  j["count"] = count.str();
  j["predicate"] = std::string(predicate_name(pred));
  j["n"] = decimal(o.n);
  j["m"] = decimal(o.m);
  emit(out, j);
}

void cmd_count_degseq(const Options& o, std::ostream& out) {
  const DegreeSequence d = load_degrees(o.file);
  const CountEstimate e = log_count_degseq(d, parse_degseq_regime(o.regime));
  emit(out, to_json(e));
}

void cmd_count_exact_degseq(const Options& o, std::ostream& out) {
  const DegreeSequence d = load_degrees(o.file);
  const Predicate pred = parse_predicate(o.predicate);
  const MatchingCount mc = count_favorable_matchings(d, pred);
  const BigInt count = exact_count_degseq(d, pred);
  const Rational probability(mc.favorable, mc.total);
  Json j;
  j["count"] = count.str();
  j["predicate"] = std::string(predicate_name(pred));
  j["n"] = decimal(static_cast<std::int64_t>(d.size()));
  j["m"] = decimal(d.edge_count());
  j["favorable_matchings"] = mc.favorable.str();
  j["total_matchings"] = mc.total.str();
  j["probability"] = {{"numerator", numerator(probability).str()},
                      {"denominator", denominator(probability).str()}};
  emit(out, j);
}

void cmd_sample(const Options& o, std::ostream& out) {
  Rng rng(o.seed);
  DegreeSequence d;
  if (!o.file.empty()) {
    d = load_degrees(o.file);
  } else {
    if (!o.conditioned) throw DomainError("sampling from --n/--m needs --conditioned");
    const ConditionedDegreeSampler sampler(o.n, o.m);
    d = sampler.draw(rng, o.max_tries).degrees;
  }
  if (o.kind == "pairing") {
    write_edge_list(out, sample_pairing(d, rng));
    return;
  }
  const KernelConfig config = sample_kernel_config(d, rng, true);
  Json j;
  j["degrees"] = std::vector<int>(d.degrees().begin(), d.degrees().end());
  j["kernel_labels"] = std::vector<int>(config.kernel.labels().begin(), config.kernel.labels().end());
  j["kernel"] = edge_list_text(config.kernel);
  j["assignment"] = config.assignment;
  j["pre_kernel"] = edge_list_text(config.pre_kernel);
  emit(out, j);
}

void cmd_estimate(const Options& o, std::ostream& out) {
  const SampleSpec spec = sample_spec(o, parse_model(o.model));
  const Estimate e = estimate_event(spec, parse_event(o.event), run_options(o));
  Json j = to_json(e);
  j["params"] = spec_json(spec);
  emit(out, j);
}

void cmd_xyz(const Options& o, std::ostream& out) {
  const SampleSpec spec = sample_spec(o, Model::kKernelConfig);
  const XyzSummary s = collect_xyz(spec, parse_xyz_mode(o.mode), run_options(o));
  Json j = to_json(s, o.per_sample);
  j["params"] = spec_json(spec);
  emit(out, j);
}

void cmd_shape(const Options& o, std::ostream& out) {
  emit(out, to_json(kernel_shape_stats(o.n, o.m, run_options(o))));
}

void cmd_typical(const Options& o, std::ostream& out) {
  const DegreeSequence d = load_degrees(o.file);
  const ModelParams p = derive_params(static_cast<std::int64_t>(d.size()), d.edge_count());
  TypicalRegime regime;
  if (o.regime == "a") {
    regime = TypicalRegime::kA;
  } else if (o.regime == "b") {
    regime = TypicalRegime::kB;
  } else {
    throw DomainError("unknown typicality regime: " + o.regime);
  }
  emit(out, to_json(classify_typical(d, p, regime, o.epsilon)));
}

// One sweep point: n and m from the fixed values plus the swept variable.
ModelParams sweep_point(const Json& fixed, const std::string& variable, double value) {
  Json point = fixed;
  point[variable] = value;
  if (!point.contains("n")) throw DomainError("sweep needs n, either fixed or swept");
  const auto n = static_cast<std::int64_t>(std::llround(point["n"].get<double>()));
  std::int64_t m = 0;
  if (point.contains("m")) {
    m = static_cast<std::int64_t>(std::llround(point["m"].get<double>()));
  } else if (point.contains("k")) {
    m = n + static_cast<std::int64_t>(std::llround(point["k"].get<double>()));
  } else if (point.contains("c")) {
    m = static_cast<std::int64_t>(std::llround(point["c"].get<double>() * static_cast<double>(n) / 2.0));
  } else if (point.contains("r_exponent")) {
    const double r = std::pow(static_cast<double>(n), point["r_exponent"].get<double>());
    m = n + std::max<std::int64_t>(1, std::llround(r / 2.0));
  } else {
    throw DomainError("sweep needs one of m, k, c or r_exponent");
  }
  return derive_params(n, m);
}

void cmd_table(const Options& o, std::ostream& out) {
  std::ifstream in(o.sweep);
  if (!in) throw DomainError("cannot open sweep file: " + o.sweep);
  Json sweep;
  try {
    sweep = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("invalid sweep JSON: ") + e.what());
  }
  if (!sweep.contains("variable") || !sweep.contains("values")) throw DomainError("sweep needs variable and values");
  const std::string variable = sweep["variable"].get<std::string>();
  const Json fixed = sweep.value("fixed", Json::object());
  const std::string output = sweep.value("output", std::string("-"));

  std::ostringstream csv;
  csv << "variable,value,n,m,c,r,lambda_c,log_main,log_a,log_c,log_two_edge,log_wright,log_all_graphs,"
         "a_minus_main,c_minus_main,two_edge_minus_main,wright_minus_a,wright_minus_c,main_minus_all\n";
  for (const Json& v : sweep["values"]) {
    const double value = v.get<double>();
    const ModelParams p = sweep_point(fixed, variable, value);
    const CountEstimate main = log_count_main(p);
    const CountEstimate a = log_count_case_a(p);
    const CountEstimate c = log_count_case_c(p);
    const CountEstimate two_edge = log_count_two_edge(p);
    const CountEstimate wright = log_count_wright(p.n, p.m - p.n);
    const double all = log_graph_count(p.n, p.m);
    csv << variable << ',' << decimal(value) << ',' << p.n << ',' << p.m << ',' << decimal(p.c) << ',' << p.r << ','
        << decimal(p.lambda_c) << ',' << decimal(main.log_value()) << ',' << decimal(a.log_value()) << ','
        << decimal(c.log_value()) << ',' << decimal(two_edge.log_value()) << ',' << decimal(wright.log_value())
        << ',' << decimal(all) << ',' << decimal(log_ratio(a, main)) << ',' << decimal(log_ratio(c, main)) << ','
        << decimal(log_ratio(two_edge, main)) << ',' << decimal(log_ratio(wright, a)) << ','
        << decimal(log_ratio(wright, c)) << ',' << decimal(main.log_value() - all) << '\n';
  }
  if (output == "-") {
    out << csv.str();
    return;
  }
  std::ofstream file(output);
  if (!file) throw DomainError("cannot write sweep output: " + output);
  file << csv.str();
  Json j;
  j["output"] = output;
  j["rows"] = decimal(static_cast<std::int64_t>(sweep["values"].size()));
  emit(out, j);
}

void error_json(std::ostream& err, const std::string& type, const std::string& message) {
  Json j;
  j["error"] = {{"type", type}, {"message", message}};
  err << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{kDescription, "twoconn"};
  app.require_subcommand(1);

  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 1024));
  };
  auto add_nm = [&](CLI::App* cmd, bool required) {
    auto* n = cmd->add_option("--n", o.n, "Vertex count");
    auto* m = cmd->add_option("--m", o.m, "Edge count");
    if (required) {
      n->required();
      m->required();
    }
  };
  auto add_mc = [&](CLI::App* cmd) {
    cmd->add_option("--samples", o.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Random seed");
    cmd->add_option("--max-tries", o.max_tries, "Rejection attempts per conditioned degree sequence")
        ->check(CLI::PositiveNumber);
    add_threads(cmd);
  };

  auto* params = app.add_subcommand("params", "Derived model parameters for (n, m)");
  add_nm(params, true);

  auto* count = app.add_subcommand("count", "Asymptotic and exact graph counts");
  count->require_subcommand(1);
  auto* asymptotic = count->add_subcommand("asymptotic", "Asymptotic count of (n,m)-graphs");
  add_nm(asymptotic, true);
  asymptotic->add_option("--regime", o.regime, "auto, main, a, b, c, two-edge, wright or mindeg2")
      ->check(CLI::IsMember({"auto", "main", "a", "b", "c", "two-edge", "wright", "mindeg2"}));
  auto* exact = count->add_subcommand("exact", "Exact count by enumerating edge subsets (n <= 8)");
  add_nm(exact, true);
  exact->add_option("--predicate", o.predicate, "two-connected, two-edge-connected, min-degree-2, connected, all")
      ->required();
  exact->add_flag("--allow-nine", o.allow_nine, "Permit n = 9");
  add_threads(exact);
  auto* degseq = count->add_subcommand("degseq", "Asymptotic count for a degree sequence");
  degseq->add_option("--file", o.file, "Degree file")->required();
  degseq->add_option("--regime", o.regime, "a, b or c")->required()->check(CLI::IsMember({"a", "b", "c"}));
  auto* exact_degseq = count->add_subcommand("exact-degseq", "Exact count for a degree sequence");
  exact_degseq->add_option("--file", o.file, "Degree file")->required();
  exact_degseq->add_option("--predicate", o.predicate, "Graph property")->required();

  auto* sample = app.add_subcommand("sample", "Draw one pairing or kernel configuration");
  sample->add_option("kind", o.kind, "pairing or kernel")->required()->check(CLI::IsMember({"pairing", "kernel"}));
  auto* file_opt = sample->add_option("--file", o.file, "Degree file");
  add_nm(sample, false);
  sample->add_flag("--conditioned", o.conditioned, "Draw conditioned truncated-Poisson degrees for (n, m)");
  sample->add_option("--seed", o.seed, "Random seed");
  sample->add_option("--max-tries", o.max_tries, "Rejection attempts")->check(CLI::PositiveNumber);
  file_opt->excludes(sample->get_option("--n"));
  file_opt->excludes(sample->get_option("--m"));

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo event frequency");
  estimate->add_option("--model", o.model, "pairing or kernel")->required();
  estimate->add_option("--event", o.event,
                       "simple, two_connected_and_simple, 2cs, two_edge_connected_pre_kernel, prop5_discrepancy")
      ->required();
  auto* est_degrees = estimate->add_option("--degrees", o.degrees_file, "Fixed degree file");
  add_nm(estimate, false);
  est_degrees->excludes(estimate->get_option("--n"));
  est_degrees->excludes(estimate->get_option("--m"));
  add_mc(estimate);

  auto* xyz = app.add_subcommand("xyz", "Loop and double-edge statistics of kernel configurations");
  xyz->add_option("--mode", o.mode, "section5 or section8")
      ->required()
      ->check(CLI::IsMember({"section5", "section8"}));
  auto* xyz_degrees = xyz->add_option("--degrees", o.degrees_file, "Fixed degree file");
  add_nm(xyz, false);
  xyz_degrees->excludes(xyz->get_option("--n"));
  xyz_degrees->excludes(xyz->get_option("--m"));
  xyz->add_flag("--per-sample", o.per_sample, "Include the per-sample X, Y, Z triples");
  add_mc(xyz);

  auto* shape = app.add_subcommand("shape", "Kernel size and empty-edge statistics for conditioned (n, m)");
  add_nm(shape, true);
  add_mc(shape);

  auto* typical = app.add_subcommand("typical", "Typical-set membership of a degree sequence");
  typical->add_option("--file", o.file, "Degree file")->required();
  typical->add_option("--regime", o.regime, "a or b")->required()->check(CLI::IsMember({"a", "b"}));
  typical->add_option("--epsilon", o.epsilon, "Typicality exponent")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "Regime comparison sweep written as CSV");
  table->add_option("--sweep", o.sweep, "Sweep JSON {variable, values[], fixed{}, output}")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (params->parsed()) {
      cmd_params(o, out);
    } else if (asymptotic->parsed()) {
      cmd_count_asymptotic(o, out);
    } else if (exact->parsed()) {
      cmd_count_exact(o, out);
    } else if (degseq->parsed()) {
      cmd_count_degseq(o, out);
    } else if (exact_degseq->parsed()) {
      cmd_count_exact_degseq(o, out);
    } else if (sample->parsed()) {
      cmd_sample(o, out);
    } else if (estimate->parsed()) {
      cmd_estimate(o, out);
    } else if (xyz->parsed()) {
      cmd_xyz(o, out);
    } else if (shape->parsed()) {
      cmd_shape(o, out);
    } else if (typical->parsed()) {
      cmd_typical(o, out);
    } else if (table->parsed()) {
      cmd_table(o, out);
    }
  } catch (const RetryExhausted& e) {
    error_json(err, "retry_exhausted", e.what());
    return 1;
  } catch (const LimitError& e) {
    error_json(err, "limit", e.what());
    return 1;
  } catch (const DomainError& e) {
    error_json(err, "domain", e.what());
    return 1;
  } catch (const InternalError& e) {
    error_json(err, "internal", e.what());
    return 1;
  } catch (const std::exception& e) {
    error_json(err, "error", e.what());
    return 1;
  }
  return 0;
}

}  // namespace twoconn::cli
