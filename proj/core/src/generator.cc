#include "modkernel/generator.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "modkernel/blocking_sets.h"
#include "modkernel/errors.h"
#include "modkernel/kernelizer.h"

namespace modkernel {

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kQuasiForest:
      return "quasi-forest";
    case GeneratorKind::kQuasiBipartite:
      return "quasi-bipartite";
    case GeneratorKind::kQuasiIntegral:
      return "quasi-integral";
    case GeneratorKind::kCliqueGadget:
      return "clique-gadget";
    case GeneratorKind::kStarOfTriangles:
      return "star-of-triangles";
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view text) {
  for (auto kind : {GeneratorKind::kQuasiForest, GeneratorKind::kQuasiBipartite,
                    GeneratorKind::kQuasiIntegral, GeneratorKind::kCliqueGadget,
                    GeneratorKind::kStarOfTriangles}) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

int SeededRng::below(int bound) {
  if (bound <= 0) return 0;
  return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound));
}

bool SeededRng::chance(double p) {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
}

namespace {

class EdgeSet {
 public:
  void add(int u, int v) {
    if (u == v) return;
    edges_.insert({std::min(u, v), std::max(u, v)});
  }
  bool has(int u, int v) const { return edges_.count({std::min(u, v), std::max(u, v)}) > 0; }
  std::vector<Edge> list() const { return {edges_.begin(), edges_.end()}; }

 private:
  std::set<Edge> edges_;
};

// Random tree on vertices [0, t), rooted at 0.
void random_tree(int t, SeededRng& rng, EdgeSet& edges, std::vector<int>* depth = nullptr) {
  if (depth) depth->assign(t, 0);
  for (int v = 1; v < t; ++v) {
    int parent = rng.below(v);
    edges.add(parent, v);
    if (depth) (*depth)[v] = (*depth)[parent] + 1;
  }
}

// Extra vertices [from, size) each joined to 1..3 earlier vertices.
void add_extras(int from, int size, SeededRng& rng, EdgeSet& edges) {
  for (int v = from; v < size; ++v) {
    int degree = rng.between(1, std::min(3, v));
    for (int i = 0; i < degree; ++i) edges.add(v, rng.below(v));
  }
}

Graph permuted(int size, const EdgeSet& edges, SeededRng& rng) {
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = size - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  std::vector<Edge> out;
  for (auto [u, v] : edges.list()) out.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(size, out);
}

Graph bipartite_plus_extras(int size, int d, SeededRng& rng) {
  const int base = size - d;
  EdgeSet edges;
  std::vector<int> depth;
  random_tree(base, rng, edges, &depth);
  for (int u = 0; u < base; ++u) {
    for (int v = u + 1; v < base; ++v) {
      if ((depth[u] + depth[v]) % 2 == 1 && rng.chance(0.15)) edges.add(u, v);
    }
  }
  add_extras(base, size, rng, edges);
  return permuted(size, edges, rng);
}

}  // namespace

Graph random_component(GraphClass cls, int size, int d, SeededRng& rng, int cap) {
  if (size < 1 || size < d + 1) {
    throw InputError("component size " + std::to_string(size) + " is smaller than d + 1 = " +
                     std::to_string(d + 1));
  }
  switch (cls) {
    case GraphClass::kQuasiForest: {
      EdgeSet edges;
      random_tree(size - d, rng, edges);
      add_extras(size - d, size, rng, edges);
      return permuted(size, edges, rng);
    }
    case GraphClass::kQuasiBipartite:
      return bipartite_plus_extras(size, d, rng);
    case GraphClass::kQuasiIntegral: {
      // A bipartite graph plus d vertices always satisfies vc <= LP + d;
      // clique-seeded shapes are kept only when they pass the check.
      if (d > 0 && rng.below(3) == 0) {
        const int clique = rng.between(2, std::min(size, 2 * d + 2));
        EdgeSet edges;
        for (int u = 0; u < clique; ++u) {
          for (int v = u + 1; v < clique; ++v) edges.add(u, v);
        }
        for (int v = clique; v < size; ++v) edges.add(v, rng.below(v));
        Graph candidate = permuted(size, edges, rng);
        if (recognize_class(candidate, d, cls, cap).member) return candidate;
      }
      return bipartite_plus_extras(size, d, rng);
    }
  }
  return Graph(size);
}

Graph star_of_triangles(int d) {
  std::vector<Edge> edges;
  for (int leaf = 1; leaf <= d; ++leaf) {
    const int a = d + 2 * leaf - 1;
    const int b = a + 1;
    edges.emplace_back(0, leaf);
    edges.emplace_back(leaf, a);
    edges.emplace_back(leaf, b);
    edges.emplace_back(a, b);
  }
  return Graph::from_edges(1 + 3 * d, edges);
}

namespace {

void check_spec(const GeneratorSpec& spec) {
  auto fail = [](const std::string& why) { throw InputError("generator spec: " + why); };
  if (spec.component_count < 0) fail("component_count must be non-negative");
  if (spec.modulator_size < 0) fail("modulator_size must be non-negative");
  if (spec.d < 0) fail("d must be non-negative");
  for (double p : {spec.edge_density_to_x, spec.modulator_edge_density, spec.wire_probability}) {
    if (!(p >= 0.0 && p <= 1.0)) fail("probabilities must lie in [0, 1]");
  }
  const bool gadget = spec.kind == GeneratorKind::kCliqueGadget ||
                      spec.kind == GeneratorKind::kStarOfTriangles;
  if (!gadget && (spec.component_size < 1 || spec.component_size < spec.d + 1)) {
    fail("component_size " + std::to_string(spec.component_size) + " < d + 1");
  }
}

GraphClass class_of(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::kQuasiForest:
      return GraphClass::kQuasiForest;
    case GeneratorKind::kQuasiBipartite:
      return GraphClass::kQuasiBipartite;
    case GeneratorKind::kQuasiIntegral:
      return GraphClass::kQuasiIntegral;
    default:
      return spec.gadget_class;
  }
}

}  // namespace

Instance generate(const GeneratorSpec& spec, int cap) {
  check_spec(spec);
  SeededRng rng(spec.seed);
  const GraphClass cls = class_of(spec);
  const int mx = spec.modulator_size;

  std::vector<Graph> components;
  for (int c = 0; c < spec.component_count; ++c) {
    switch (spec.kind) {
      case GeneratorKind::kCliqueGadget:
        components.push_back(complete_graph(class_budget(cls, spec.d)));
        break;
      case GeneratorKind::kStarOfTriangles:
        components.push_back(star_of_triangles(spec.d));
        break;
      default:
        components.push_back(random_component(cls, spec.component_size, spec.d, rng, cap));
    }
  }

  EdgeSet edges;
  for (int u = 0; u < mx; ++u) {
    for (int v = u + 1; v < mx; ++v) {
      if (rng.chance(spec.modulator_edge_density)) edges.add(u, v);
    }
  }
  int offset = mx;
  auto alpha = [&](const Graph& f) { return independence_number_in_class(f, spec.d, cls, cap); };
  for (const Graph& h : components) {
    for (auto [u, v] : h.edges()) edges.add(offset + u, offset + v);
    for (int x = 0; x < mx; ++x) {
      for (int v = 0; v < h.size(); ++v) {
        if (rng.chance(spec.edge_density_to_x)) edges.add(x, offset + v);
      }
    }
    if (mx > 0 && rng.chance(spec.wire_probability)) {
      const int x = rng.below(mx);
      for (Vertex y : shrink_to_minimal_blocking_set(h, h.vertex_set(), alpha)) {
        edges.add(x, offset + y);
      }
    }
    offset += h.size();
  }

  Instance inst;
  inst.graph = Graph::from_edges(offset, edges.list());
  std::vector<Vertex> x(mx);
  std::iota(x.begin(), x.end(), 0);
  inst.modulator = VertexSet(std::move(x));
  inst.d = spec.d;
  inst.cls = cls;
  // Default target alpha(G); past 20 modulator vertices, alpha(G - X).
  if (spec.k) {
    inst.k = *spec.k;
  } else if (mx <= 20) {
    inst.k = alpha_with_modulator(inst, cap);
  } else {
    inst.k = alpha(remove_vertices(inst.graph, inst.modulator));
  }
  try {
    validate_instance(inst, cap);
  } catch (const InputError& e) {
    throw InputError(std::string("generated instance is invalid: ") + e.what());
  }
  return inst;
}

}  // namespace modkernel
