#include "modkernel/blocking_sets.h"

#include <algorithm>
#include <bit>
#include <string>

#include "modkernel/errors.h"
#include "modkernel/mask_graph.h"

namespace modkernel {

int class_budget(GraphClass cls, int d) {
  return cls == GraphClass::kQuasiIntegral ? 2 * d + 2 : d + 2;
}

namespace {

void check_subset(const Graph& h, const VertexSet& y) {
  for (Vertex v : y) {
    if (!h.has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " is not in the host graph");
  }
}

}  // namespace

bool is_blocking_set(const Graph& h, const VertexSet& y, int cap) {
  check_subset(h, y);
  if (y.empty()) return false;
  return independence_number(h, cap) > independence_number(remove_vertices(h, y), cap);
}

bool is_minimal_blocking_set(const Graph& h, const VertexSet& y, int cap) {
  if (!is_blocking_set(h, y, cap)) return false;
  for (Vertex v : y) {
    if (is_blocking_set(h, y.without({v}), cap)) return false;
  }
  return true;
}

bool is_minimal_blocking_set_exhaustive(const Graph& h, const VertexSet& y, int cap) {
  check_subset(h, y);
  if (h.size() > cap) throw RefusalError("blocking-set check exceeds the brute-force cap");
  if (y.size() > 30) throw RefusalError("too many proper subsets to enumerate");
  MaskGraph mg(h);
  const Mask all = mg.all();
  const int alpha = mg.independence_number(all);
  const Mask ym = mg.to_mask(h, y);
  if (y.empty() || mg.independence_number(all & ~ym) >= alpha) return false;
  // Proper subsets of ym via the standard submask walk.
  for (Mask sub = (ym - 1) & ym;; sub = (sub - 1) & ym) {
    if (sub != 0 && mg.independence_number(all & ~sub) < alpha) return false;
    if (sub == 0) break;
  }
  return true;
}

BlockingSetReport enumerate_minimal_blocking_sets(const Graph& h, int class_bound, int cap) {
  if (h.size() > std::min(cap, 30)) {
    throw RefusalError("blocking-set enumeration: " + std::to_string(h.size()) +
                       " vertices exceed the cap of " + std::to_string(std::min(cap, 30)));
  }
  MaskGraph mg(h);
  const auto alpha_of = mg.independence_table();
  const Mask all = mg.all();
  const int alpha = alpha_of[all];

  std::vector<Mask> minimal;
  for (Mask y = 1; y <= all && y != 0; ++y) {
    if (alpha_of[all & ~y] >= alpha) continue;
    bool is_minimal = true;
    for (Mask rest = y; rest; rest &= rest - 1) {
      Mask smaller = y & ~(rest & -rest);
      if (alpha_of[all & ~smaller] < alpha) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back(y);
  }

  BlockingSetReport report;
  report.host = h;
  report.class_bound = class_bound;
  for (Mask m : minimal) report.minimal_sets.push_back(mg.to_set(h, m));
  std::sort(report.minimal_sets.begin(), report.minimal_sets.end(),
            [](const VertexSet& a, const VertexSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (const auto& s : report.minimal_sets) {
    report.max_minimal_size = std::max(report.max_minimal_size, static_cast<int>(s.size()));
  }
  report.bound_respected = report.max_minimal_size <= class_bound;
  return report;
}

}  // namespace modkernel
