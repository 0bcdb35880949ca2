#include "modkernel/kernelizer.h"

#include <algorithm>
#include <limits>
#include <thread>

#include "modkernel/blocking_sets.h"
#include "modkernel/errors.h"
#include "modkernel/lp_relax.h"

namespace modkernel {

AlphaSolver::AlphaSolver(GraphClass cls, int d, int cap) : cls_(cls), d_(d), cap_(cap) {}

AlphaSolver AlphaSolver::brute_force(int cap) {
  AlphaSolver solver;
  solver.cap_ = cap;
  return solver;
}

int AlphaSolver::operator()(const Graph& f) const {
  if (cls_) return independence_number_in_class(f, d_, *cls_, cap_);
  int total = 0;
  for (const Graph& c : connected_components(f)) total += independence_number(c, cap_);
  return total;
}

namespace {

void require_independent(const Graph& g, const VertexSet& x_i) {
  for (Vertex v : x_i) {
    if (!g.has_vertex(v)) throw InputError("X_I vertex " + std::to_string(v) + " is not in G");
  }
  if (!is_independent_set(g, x_i)) throw InputError("X_I is not independent in G");
}

VertexSet neighbors_inside(const Graph& g, const VertexSet& x_i, const Graph& f) {
  return neighborhood(g, x_i).intersected(f.vertex_set());
}

}  // namespace

int conflicts(const Graph& f, const VertexSet& x_i, const Graph& g, const AlphaSolver& alpha) {
  require_independent(g, x_i);
  VertexSet hit = neighbors_inside(g, x_i, f);
  if (hit.empty()) return 0;
  return alpha(f) - alpha(remove_vertices(f, hit));
}

VertexSet shrink_conflict_witness(const Graph& h, const VertexSet& x_i, const Graph& g,
                                  int budget, const AlphaSolver& alpha) {
  require_independent(g, x_i);
  VertexSet y = neighbors_inside(g, x_i, h);
  const int full = alpha(h);
  if (y.empty() || alpha(remove_vertices(h, y)) >= full) {
    throw ContractError("shrink_conflict_witness needs conf(H, X_I) > 0");
  }
  VertexSet minimal = shrink_to_minimal_blocking_set(h, y, alpha);
  std::vector<Vertex> picked;
  for (Vertex yv : minimal) {
    for (Vertex xv : x_i) {
      if (g.adjacent(xv, yv)) {
        picked.push_back(xv);
        break;
      }
    }
  }
  VertexSet witness(std::move(picked));
  if (static_cast<int>(witness.size()) > budget) {
    throw ContractError("minimal blocking set of size " + std::to_string(minimal.size()) +
                        " exceeds the class budget " + std::to_string(budget));
  }
  return witness;
}

std::vector<VertexSet> independent_subsets(const Graph& g, const VertexSet& x, int budget) {
  const auto& xs = x.members();
  std::vector<VertexSet> out;
  std::vector<Vertex> current;
  // Depth-first over ascending members yields, per size, lexicographic order.
  for (int size = 1; size <= std::min<int>(budget, static_cast<int>(xs.size())); ++size) {
    auto extend = [&](auto&& self, std::size_t from) -> void {
      if (static_cast<int>(current.size()) == size) {
        out.emplace_back(current);
        return;
      }
      for (std::size_t i = from; i < xs.size(); ++i) {
        bool ok = true;
        for (Vertex c : current) {
          if (g.adjacent(c, xs[i])) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        current.push_back(xs[i]);
        self(self, i + 1);
        current.pop_back();
      }
    };
    extend(extend, 0);
  }
  return out;
}

ConflictTable build_conflict_table(const Graph& g, const VertexSet& x,
                                   const std::vector<Graph>& components, int budget,
                                   const AlphaSolver& alpha, int threads) {
  ConflictTable table;
  table.budget = budget;
  table.subsets = independent_subsets(g, x, budget);
  table.per_component.assign(components.size(), std::vector<int>(table.subsets.size(), 0));
  table.total.assign(table.subsets.size(), 0);

  std::vector<VertexSet> subset_neighbors;
  for (const auto& s : table.subsets) subset_neighbors.push_back(neighborhood(g, s));

  auto fill = [&](std::size_t c) {
    const Graph& h = components[c];
    const VertexSet vh = h.vertex_set();
    std::optional<int> full;
    for (std::size_t s = 0; s < table.subsets.size(); ++s) {
      VertexSet hit = subset_neighbors[s].intersected(vh);
      if (hit.empty()) continue;
      if (!full) full = alpha(h);
      table.per_component[c][s] = *full - alpha(remove_vertices(h, hit));
    }
  };
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(components.size())));
  if (workers == 1) {
    for (std::size_t c = 0; c < components.size(); ++c) fill(c);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < components.size(); c += workers) fill(c);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& row : table.per_component) {
    for (std::size_t s = 0; s < row.size(); ++s) table.total[s] += row[s];
  }
  return table;
}

namespace {

Deletability evaluate(const ConflictTable& table, std::size_t c, int modulator_size) {
  Deletability out;
  out.deletable = true;
  for (std::size_t s = 0; s < table.subsets.size(); ++s) {
    const int here = table.per_component[c][s];
    if (here <= 0) continue;
    ConflictCheck check{table.subsets[s], here, table.total[s] - here};
    if (check.conf_rest < modulator_size && out.deletable) {
      out.deletable = false;
      out.certificate = check.x_i;
    }
    out.checks.push_back(std::move(check));
  }
  return out;
}

std::vector<Graph> components_outside(const Instance& inst) {
  return connected_components(remove_vertices(inst.graph, inst.modulator));
}

AlphaSolver solver_for(const Instance& inst, const KernelOptions& options) {
  return AlphaSolver(inst.cls, inst.d, options.cap);
}

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
  if (a > std::numeric_limits<std::int64_t>::max() - b) return std::numeric_limits<std::int64_t>::max();
  return a + b;
}

std::int64_t saturating_multiply(std::int64_t a, std::int64_t b) {
  if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a) {
    return std::numeric_limits<std::int64_t>::max();
  }
  return a * b;
}

}  // namespace

std::int64_t saturating_power(std::int64_t base, int exponent) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) out = saturating_multiply(out, base);
  return out;
}

Deletability deletable_component(const Instance& inst, const Graph& h,
                                 const KernelOptions& options) {
  auto components = components_outside(inst);
  auto it = std::find_if(components.begin(), components.end(), [&](const Graph& c) {
    return c.vertex_set() == h.vertex_set();
  });
  if (it == components.end()) throw ContractError("H is not a component of G - X");
  auto table = build_conflict_table(inst.graph, inst.modulator, components,
                                    class_budget(inst.cls, inst.d), solver_for(inst, options),
                                    options.threads);
  return evaluate(table, static_cast<std::size_t>(it - components.begin()),
                  static_cast<int>(inst.modulator.size()));
}

std::optional<Rule1Step> apply_rule1_once(const Instance& inst, const KernelOptions& options) {
  auto components = components_outside(inst);
  const AlphaSolver alpha = solver_for(inst, options);
  auto table = build_conflict_table(inst.graph, inst.modulator, components,
                                    class_budget(inst.cls, inst.d), alpha, options.threads);
  for (std::size_t c = 0; c < components.size(); ++c) {
    Deletability verdict = evaluate(table, c, static_cast<int>(inst.modulator.size()));
    if (!verdict.deletable) continue;
    Rule1Step step;
    step.record.component = components[c].vertex_set();
    step.record.alpha_credit = alpha(components[c]);
    step.record.checks = std::move(verdict.checks);
    step.reduced = inst;
    step.reduced.graph = remove_vertices(inst.graph, step.record.component);
    step.reduced.k = inst.k - step.record.alpha_credit;
    return step;
  }
  return std::nullopt;
}

std::pair<Instance, KernelReport> apply_rule1_exhaustively(const Instance& inst,
                                                           const KernelOptions& options) {
  const int xs = static_cast<int>(inst.modulator.size());
  const int budget = class_budget(inst.cls, inst.d);
  auto components = components_outside(inst);
  const AlphaSolver alpha = solver_for(inst, options);
  ConflictTable table =
      build_conflict_table(inst.graph, inst.modulator, components, budget, alpha, options.threads);

  KernelReport report;
  report.cls = inst.cls;
  report.d = inst.d;
  report.budget = budget;
  report.n_before = inst.graph.size();
  report.k_before = inst.k;
  report.components_before = static_cast<int>(components.size());
  report.component_bound = saturating_power(xs, budget + 1);
  report.modulator_before = xs;
  report.modulator_after = xs;

  std::vector<std::size_t> alive(components.size());
  for (std::size_t c = 0; c < alive.size(); ++c) alive[c] = c;
  std::vector<Vertex> deleted_vertices;
  int k = inst.k;
  while (true) {
    auto pos = alive.end();
    Deletability verdict;
    for (auto it = alive.begin(); it != alive.end(); ++it) {
      verdict = evaluate(table, *it, xs);
      if (verdict.deletable) {
        pos = it;
        break;
      }
    }
    if (pos == alive.end()) break;
    const std::size_t c = *pos;
    DeletionRecord record;
    record.component = components[c].vertex_set();
    record.alpha_credit = alpha(components[c]);
    record.checks = std::move(verdict.checks);
    k -= record.alpha_credit;
    for (std::size_t s = 0; s < table.total.size(); ++s) table.total[s] -= table.per_component[c][s];
    deleted_vertices.insert(deleted_vertices.end(), record.component.begin(), record.component.end());
    report.deleted_components.push_back(std::move(record));
    alive.erase(pos);
  }

  for (std::size_t c : alive) {
    Deletability verdict = evaluate(table, c, xs);
    SurvivorRecord survivor;
    survivor.component = components[c].vertex_set();
    if (!verdict.certificate) {
      report.checks.certificate_audit = false;
      report.surviving_components.push_back(std::move(survivor));
      continue;
    }
    auto s = static_cast<std::size_t>(
        std::find(table.subsets.begin(), table.subsets.end(), *verdict.certificate) -
        table.subsets.begin());
    survivor.certificate = {table.subsets[s], table.per_component[c][s],
                            table.total[s] - table.per_component[c][s]};
    for (std::size_t other : alive) {
      if (table.per_component[other][s] > 0) ++survivor.components_sharing_certificate;
    }
    if (survivor.components_sharing_certificate > xs) report.checks.certificate_audit = false;
    report.surviving_components.push_back(std::move(survivor));
  }

  Instance reduced = inst;
  reduced.graph = remove_vertices(inst.graph, VertexSet(std::move(deleted_vertices)));
  reduced.k = k;
  report.k_after = k;
  report.n_after = reduced.graph.size();
  report.components_after = static_cast<int>(alive.size());
  report.checks.component_bound = report.components_after <= report.component_bound;
  report.modulator_bound =
      saturating_add(saturating_multiply(inst.d, report.component_bound), xs);
  return {std::move(reduced), std::move(report)};
}

ModulatorExtension extend_modulator(const Instance& inst) {
  ModulatorExtension out;
  out.instance = inst;
  if (inst.cls == GraphClass::kQuasiIntegral) {
    out.notice = "quasi-integral instances are handed off above LP; modulator unchanged";
    return out;
  }
  std::vector<Vertex> added;
  for (const Graph& h : components_outside(inst)) {
    auto z = inst.cls == GraphClass::kQuasiForest ? find_fvs(h, inst.d) : find_oct(h, inst.d);
    if (!z) {
      throw ContractError("component of G - X is not " + std::to_string(inst.d) + "-" +
                          std::string(to_string(inst.cls)));
    }
    added.insert(added.end(), z->begin(), z->end());
  }
  out.added = VertexSet(std::move(added));
  out.instance.modulator = inst.modulator.united(out.added);
  out.instance.d = 0;
  out.applied = true;
  return out;
}

GapReport above_lp_gap(const Instance& inst, int cap) {
  GapReport out;
  const int xs = static_cast<int>(inst.modulator.size());
  out.vc_target = inst.graph.size() - inst.k;
  Graph rest = remove_vertices(inst.graph, inst.modulator);
  auto components = connected_components(rest);
  std::vector<Vertex> mis;
  for (const Graph& c : components) {
    auto found = mis_bruteforce(c, cap);
    mis.insert(mis.end(), found.all_mis.front().begin(), found.all_mis.front().end());
  }
  out.vc_remainder = rest.size() - static_cast<int>(mis.size());
  out.bound = saturating_add(
      xs, saturating_multiply(inst.d, saturating_power(xs, 2 * inst.d + 3)));
  out.audited_bound = xs + static_cast<std::int64_t>(inst.d) * static_cast<std::int64_t>(components.size());
  if (out.vc_target >= out.vc_remainder + xs) {
    out.solved = true;
    out.cover = inst.modulator.united(rest.vertex_set().without(VertexSet(std::move(mis))));
    return out;
  }
  out.lp_vc = lp_vc_opt(inst.graph).value();
  out.gap = Half::from_int(out.vc_target) - out.lp_vc;
  out.bound_respected = out.gap <= Half::from_int(out.bound);
  return out;
}

bool KernelReport::all_checks_pass() const {
  return checks.component_bound && checks.certificate_audit && checks.modulator_bound &&
         checks.remainder_in_target_class && checks.gap_bound;
}

namespace {

Instance empty_instance(const Instance& like) {
  Instance out;
  out.d = like.d;
  out.cls = like.cls;
  return out;
}

}  // namespace

KernelResult kernelize(const Instance& inst, const KernelOptions& options) {
  KernelResult result;
  if (inst.k <= 0) {
    result.report.cls = inst.cls;
    result.report.d = inst.d;
    result.report.budget = class_budget(inst.cls, inst.d);
    result.report.status = "trivially-yes";
    result.report.n_before = inst.graph.size();
    result.report.k_before = inst.k;
    result.report.modulator_before = static_cast<int>(inst.modulator.size());
    result.reduced = empty_instance(inst);
    return result;
  }

  auto [reduced, report] = apply_rule1_exhaustively(inst, options);
  if (reduced.k <= 0) {
    report.status = "trivially-yes";
    report.n_after = 0;
    report.modulator_after = 0;
    result.reduced = empty_instance(inst);
    result.report = std::move(report);
    return result;
  }

  if (inst.cls == GraphClass::kQuasiIntegral) {
    GapReport gap = above_lp_gap(reduced, options.cap);
    report.checks.gap_bound = gap.bound_respected;
    report.above_lp_gap = gap;
    if (gap.solved) {
      report.status = "solved";
      report.n_after = 0;
      report.modulator_after = 0;
      result.reduced = empty_instance(inst);
      result.report = std::move(report);
      return result;
    }
  } else {
    ModulatorExtension extension = extend_modulator(reduced);
    Graph remainder = remove_vertices(extension.instance.graph, extension.instance.modulator);
    report.checks.remainder_in_target_class = inst.cls == GraphClass::kQuasiForest
                                                  ? is_acyclic(remainder)
                                                  : is_bipartite(remainder);
    report.added_to_modulator = extension.added;
    reduced = std::move(extension.instance);
  }

  report.modulator_after = static_cast<int>(reduced.modulator.size());
  report.checks.modulator_bound = report.modulator_after <= report.modulator_bound;
  report.label_map.assign(reduced.graph.labels().begin(), reduced.graph.labels().end());
  result.reduced = compacted(reduced);
  result.report = std::move(report);
  return result;
}

int alpha_with_modulator(const Instance& inst, int cap) {
  const auto& xs = inst.modulator.members();
  if (xs.size() > 30) throw RefusalError("modulator too large to enumerate");
  Graph rest = remove_vertices(inst.graph, inst.modulator);
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << xs.size()); ++mask) {
    std::vector<Vertex> picked;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (mask >> i & 1) picked.push_back(xs[i]);
    }
    VertexSet s(std::move(picked));
    if (!is_independent_set(inst.graph, s)) continue;
    Graph free = remove_vertices(rest, neighborhood(inst.graph, s).without(inst.modulator));
    best = std::max(best, static_cast<int>(s.size()) +
                              independence_number_in_class(free, inst.d, inst.cls, cap));
  }
  return best;
}

}  // namespace modkernel
