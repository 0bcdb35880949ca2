#include "modkernel/instance.h"

#include "modkernel/errors.h"

namespace modkernel {

namespace {

std::string describe(const Graph& component) {
  std::string out = "{";
  for (int i = 0; i < component.size(); ++i) {
    if (i > 0) out += ",";
    if (i == 8) {
      out += "...";
      break;
    }
    out += std::to_string(component.label(i));
  }
  return out + "}";
}

}  // namespace

void validate_instance(const Instance& inst, int cap) {
  for (Vertex v : inst.modulator) {
    if (!inst.graph.has_vertex(v)) {
      throw InputError("modulator vertex " + std::to_string(v) + " is not in the graph");
    }
  }
  if (inst.d < 0) throw InputError("d must be non-negative");
  if (inst.k < 0 || inst.k > inst.graph.size()) {
    throw InputError("k = " + std::to_string(inst.k) + " is outside 0.." +
                     std::to_string(inst.graph.size()));
  }
  auto components = connected_components(remove_vertices(inst.graph, inst.modulator));
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!recognize_class(components[i], inst.d, inst.cls, cap).member) {
      throw InputError("component " + std::to_string(i) + " " + describe(components[i]) +
                       " of G - X is not " + std::to_string(inst.d) + "-" +
                       std::string(to_string(inst.cls)));
    }
  }
}

Instance compacted(const Instance& inst) {
  Instance out = inst;
  out.graph = compacted(inst.graph);
  std::vector<Vertex> x;
  for (Vertex v : inst.modulator) x.push_back(inst.graph.index_of(v));
  out.modulator = VertexSet(std::move(x));
  return out;
}

}  // namespace modkernel
