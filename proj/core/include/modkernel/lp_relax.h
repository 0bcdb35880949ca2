#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modkernel/graph.h"
#include "modkernel/half.h"

namespace modkernel {

enum class LpSense { kVertexCover, kIndependentSet };

// Half-integral point of LP_VC or LP_IS. Values are stored doubled (0, 1, 2)
// and aligned with the ascending label order of the host graph.
class HalfIntegralSolution {
 public:
  HalfIntegralSolution() = default;
  HalfIntegralSolution(LpSense sense, std::vector<Vertex> labels,
                       std::vector<std::uint8_t> twice_values);

  LpSense sense() const { return sense_; }
  std::span<const Vertex> labels() const { return labels_; }
  std::span<const std::uint8_t> twice_values() const { return twice_; }

  Half value() const;
  Half value_of(Vertex v) const;

  // V_0, V_1/2, V_1.
  VertexSet zeros() const { return part(0); }
  VertexSet halves() const { return part(1); }
  VertexSet ones() const { return part(2); }

  // Copy with every vertex of `s` set to 1/2.
  HalfIntegralSolution with_half(const VertexSet& s) const;

  friend bool operator==(const HalfIntegralSolution&, const HalfIntegralSolution&) = default;

 private:
  VertexSet part(std::uint8_t twice) const;

  LpSense sense_ = LpSense::kVertexCover;
  std::vector<Vertex> labels_;
  std::vector<std::uint8_t> twice_;
};

bool is_feasible(const Graph& g, const HalfIntegralSolution& sol);

// Optimum of LP_VC via the bipartite double cover: x_v is half the number of
// copies of v in a Koenig cover of the double cover.
HalfIntegralSolution lp_vc_opt(const Graph& g);

// x' = 1 - x; maps an (optimum) VC solution to an (optimum) IS solution.
// Throws InputError if `sol` is not a VC solution.
HalfIntegralSolution lp_is_from_vc(const HalfIntegralSolution& sol);

// Optimum LP_IS value, |V| - LP_VC(g).
Half lp_is_value(const Graph& g);

// Nonempty V0' of V0 with |N(V0') n V1| <= |V0'|, if any. Found with one
// matching per V0 vertex where that vertex is given a second copy: Hall's
// condition for the doubled graph fails exactly when such a set contains it.
// Throws ContractError if `sol` is not a feasible optimum IS solution.
std::optional<VertexSet> surplus_violator(const Graph& g, const HalfIntegralSolution& sol);

// Same contract, by enumerating every nonempty V0' (|V0| <= max_zeros).
std::optional<VertexSet> surplus_violator_by_enumeration(const Graph& g,
                                                         const HalfIntegralSolution& sol,
                                                         int max_zeros = 20);

// Optimum IS solution with inclusion-maximal V_1/2. Every maximum independent
// set I then satisfies V1 <= I <= V \ V0.
HalfIntegralSolution extremal_lp_is(const Graph& g);

}  // namespace modkernel
