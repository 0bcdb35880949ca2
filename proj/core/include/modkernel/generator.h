#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "modkernel/exact_solvers.h"
#include "modkernel/graph.h"
#include "modkernel/instance.h"

namespace modkernel {

enum class GeneratorKind {
  kQuasiForest,
  kQuasiBipartite,
  kQuasiIntegral,
  kCliqueGadget,     // K_{d+2} or K_{2d+2} components
  kStarOfTriangles,  // star with d leaves, a triangle hung on each leaf
};

std::string_view to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view text);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kQuasiForest;
  int component_count = 4;
  int component_size = 6;
  int modulator_size = 2;
  int d = 1;
  double edge_density_to_x = 0.2;
  double modulator_edge_density = 0.3;
  // Per component: probability that one X vertex is wired to every vertex of
  // a minimal blocking set of the component.
  double wire_probability = 0.5;
  std::uint64_t seed = 1;
  // Class tag for clique-gadget / star-of-triangles.
  GraphClass gadget_class = GraphClass::kQuasiIntegral;
  // Independent-set target; defaults to alpha(G), or alpha(G - X) past 20 modulator vertices.
  std::optional<int> k;
};

// Deterministic bounded draws on top of mt19937_64 (whose output sequence
// is fixed by the standard, unlike the std distributions).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, bound).
  int below(int bound);
  // Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

// A connected component of `size` vertices (labels 0..size-1) in the class,
// built as a random tree / bipartite base plus at most d extra vertices.
// Throws InputError when size < d + 1.
Graph random_component(GraphClass cls, int size, int d, SeededRng& rng,
                       int cap = kDefaultBruteForceCap);

Graph star_of_triangles(int d);

// Throws InputError on inconsistent specs. The result always passes
// validate_instance.
Instance generate(const GeneratorSpec& spec, int cap = kDefaultBruteForceCap);

}  // namespace modkernel
