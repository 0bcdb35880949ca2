#include "modkernel/cli.h"

#include <CLI11.hpp>

#include <iostream>
#include <memory>

#include "modkernel/blocking_sets.h"
#include "modkernel/errors.h"
#include "modkernel/generator.h"
#include "modkernel/instance_io.h"
#include "modkernel/kernelizer.h"
#include "modkernel/lp_relax.h"
#include "modkernel/report_json.h"

namespace modkernel {

namespace {

struct CommonFlags {
  std::string graph;
  std::string out;
  std::string report;
  std::string cls;
  int d = -1;
  int cap = kDefaultBruteForceCap;
  int threads = 1;
};

Instance load(const CommonFlags& flags) {
  if (flags.graph.empty()) throw InputError("--graph is required");
  Instance inst = read_instance_file(flags.graph, {flags.cap, /*check_class=*/false});
  if (!flags.cls.empty()) {
    auto cls = parse_graph_class(flags.cls);
    if (!cls) throw InputError("unknown class '" + flags.cls + "'");
    inst.cls = *cls;
  }
  if (flags.d >= 0) inst.d = flags.d;
  try {
    validate_instance(inst, flags.cap);
  } catch (const InputError& e) {
    throw ParseError(ParseError::Kind::kClass, 0, e.what());
  }
  return inst;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

int cmd_kernelize(const CommonFlags& flags, std::ostream& out) {
  Instance inst = load(flags);
  KernelResult result = kernelize(inst, {flags.cap, flags.threads});
  if (!flags.out.empty()) write_text_file(flags.out, emit_instance(result.reduced));
  emit(flags.report, to_json(result.report).dump(2) + "\n", out);
  return result.report.all_checks_pass() ? kExitOk : kExitViolation;
}

int cmd_verify(const CommonFlags& flags, std::ostream& out) {
  Instance inst = load(flags);
  const KernelOptions options{flags.cap, flags.threads};
  const int alpha = independence_number(inst.graph, flags.cap);
  Json summary;
  summary["n"] = inst.graph.size();
  summary["k"] = inst.k;
  summary["alpha"] = alpha;

  // Each single deletion must satisfy alpha(G) >= k <=> alpha(G') >= k' for
  // every k, i.e. alpha(G) = alpha(G') + alpha(H).
  bool ok = true;
  Json steps = Json::array();
  Instance current = inst;
  int current_alpha = alpha;
  while (auto step = apply_rule1_once(current, options)) {
    const int next_alpha = independence_number(step->reduced.graph, flags.cap);
    const bool equivalent = current_alpha == next_alpha + step->record.alpha_credit;
    ok = ok && equivalent;
    steps.push_back({{"deleted", to_json(step->record.component)},
                     {"alpha_credit", step->record.alpha_credit},
                     {"alpha_after", next_alpha},
                     {"equivalent", equivalent}});
    current = std::move(step->reduced);
    current_alpha = next_alpha;
  }
  summary["rule1_steps"] = std::move(steps);

  KernelResult result = kernelize(inst, options);
  bool answer_preserved = true;
  if (result.report.status == "reduced") {
    const int reduced_alpha = independence_number(result.reduced.graph, flags.cap);
    answer_preserved = (alpha >= inst.k) == (reduced_alpha >= result.reduced.k);
    summary["reduced_alpha"] = reduced_alpha;
  } else {
    answer_preserved = alpha >= inst.k;
  }
  summary["kernel_status"] = result.report.status;
  summary["answer_preserved"] = answer_preserved;
  summary["kernel_checks_pass"] = result.report.all_checks_pass();
  ok = ok && answer_preserved && result.report.all_checks_pass();
  summary["ok"] = ok;
  emit(flags.report, summary.dump(2) + "\n", out);
  return ok ? kExitOk : kExitViolation;
}

int cmd_blocking(const CommonFlags& flags, std::ostream& out) {
  Instance inst = load(flags);
  const int bound = class_budget(inst.cls, inst.d);
  Json summary;
  summary["class"] = std::string(to_string(inst.cls));
  summary["d"] = inst.d;
  summary["class_bound"] = bound;
  Json components = Json::array();
  int max_size = 0;
  bool respected = true;
  for (const Graph& h : connected_components(remove_vertices(inst.graph, inst.modulator))) {
    BlockingSetReport report = enumerate_minimal_blocking_sets(h, bound, flags.cap);
    max_size = std::max(max_size, report.max_minimal_size);
    respected = respected && report.bound_respected;
    components.push_back(to_json(report));
  }
  summary["max_minimal_size"] = max_size;
  summary["bound_respected"] = respected;
  summary["components"] = std::move(components);
  emit(flags.report, summary.dump(2) + "\n", out);
  return respected ? kExitOk : kExitViolation;
}

int cmd_lp(const CommonFlags& flags, std::ostream& out) {
  Instance inst = load(flags);
  Json summary;
  summary["lp_vc"] = to_json(lp_vc_opt(inst.graph).value());
  summary["extremal_lp_is"] = to_json(extremal_lp_is(inst.graph));
  emit(flags.report, summary.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_solve(const CommonFlags& flags, std::ostream& out) {
  Instance inst = load(flags);
  const int alpha = alpha_with_modulator(inst, flags.cap);
  Json summary;
  summary["n"] = inst.graph.size();
  summary["alpha"] = alpha;
  summary["vc"] = inst.graph.size() - alpha;
  summary["k"] = inst.k;
  summary["yes"] = alpha >= inst.k;
  emit(flags.report, summary.dump(2) + "\n", out);
  return kExitOk;
}

struct GenerateFlags {
  std::string kind = "quasi-forest";
  std::string gadget_class = "quasi-integral";
  int k = -1;
  GeneratorSpec spec;
};

int cmd_generate(const CommonFlags& flags, const GenerateFlags& gen, std::ostream& out) {
  GeneratorSpec spec = gen.spec;
  auto kind = parse_generator_kind(gen.kind);
  if (!kind) throw InputError("unknown generator kind '" + gen.kind + "'");
  spec.kind = *kind;
  auto gadget = parse_graph_class(flags.cls.empty() ? gen.gadget_class : flags.cls);
  if (!gadget) throw InputError("unknown class");
  spec.gadget_class = *gadget;
  if (flags.d >= 0) spec.d = flags.d;
  if (gen.k >= 0) spec.k = gen.k;
  emit(flags.out, emit_instance(generate(spec, flags.cap)), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kernelization for Vertex Cover / Independent Set parameterized by a modulator"};
  app.require_subcommand(1);
  CommonFlags flags;
  GenerateFlags gen;

  auto add_common = [&](CLI::App* sub, bool needs_graph) {
    auto* graph = sub->add_option("--graph", flags.graph, "Instance file");
    if (needs_graph) graph->required();
    sub->add_option("--cap", flags.cap, "Brute-force vertex cap")->capture_default_str();
    sub->add_option("--class", flags.cls,
                    "Override the class: quasi-forest | quasi-bipartite | quasi-integral");
    sub->add_option("--d", flags.d, "Override d");
    sub->add_option("--report", flags.report, "Write the JSON report here instead of stdout");
  };

  auto* kernelize_cmd = app.add_subcommand("kernelize", "Reduce an instance; emit report");
  add_common(kernelize_cmd, true);
  kernelize_cmd->add_option("--out", flags.out, "Write the reduced instance here");
  kernelize_cmd->add_option("--threads", flags.threads, "Conflict-table workers");

  auto* verify_cmd = app.add_subcommand("verify", "Brute-force equivalence check of Rule 1");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--threads", flags.threads, "Conflict-table workers");

  auto* blocking_cmd = app.add_subcommand("blocking", "Minimal blocking sets per component");
  add_common(blocking_cmd, true);

  auto* lp_cmd = app.add_subcommand("lp", "Extremal half-integral LP solution");
  add_common(lp_cmd, true);

  auto* solve_cmd = app.add_subcommand("solve", "Exact alpha / vc");
  add_common(solve_cmd, true);

  auto* generate_cmd = app.add_subcommand("generate", "Emit a seeded random instance");
  generate_cmd->add_option("--kind", gen.kind,
                           "quasi-forest | quasi-bipartite | quasi-integral | clique-gadget | "
                           "star-of-triangles")
      ->capture_default_str();
  generate_cmd->add_option("--components", gen.spec.component_count)->capture_default_str();
  generate_cmd->add_option("--component-size", gen.spec.component_size)->capture_default_str();
  generate_cmd->add_option("--modulator", gen.spec.modulator_size)->capture_default_str();
  generate_cmd->add_option("--density", gen.spec.edge_density_to_x,
                           "Edge probability between X and each component vertex")
      ->capture_default_str();
  generate_cmd->add_option("--modulator-density", gen.spec.modulator_edge_density)
      ->capture_default_str();
  generate_cmd->add_option("--wire", gen.spec.wire_probability,
                           "Probability of wiring an X vertex to a minimal blocking set")
      ->capture_default_str();
  generate_cmd->add_option("--seed", gen.spec.seed)->capture_default_str();
  generate_cmd->add_option("--k", gen.k, "Independent-set target (default alpha(G))");
  generate_cmd->add_option("--out", flags.out, "Output file (default stdout)");
  generate_cmd->add_option("--class", flags.cls, "Class tag for gadget kinds");
  generate_cmd->add_option("--d", flags.d, "d")->capture_default_str();
  generate_cmd->add_option("--cap", flags.cap, "Brute-force vertex cap");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*kernelize_cmd) return cmd_kernelize(flags, out);
    if (*verify_cmd) return cmd_verify(flags, out);
    if (*blocking_cmd) return cmd_blocking(flags, out);
    if (*lp_cmd) return cmd_lp(flags, out);
    if (*solve_cmd) return cmd_solve(flags, out);
    if (*generate_cmd) return cmd_generate(flags, gen, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RefusalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "contract violated: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace modkernel
