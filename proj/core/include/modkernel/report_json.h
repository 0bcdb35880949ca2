#pragma once

#include <nlohmann/json.hpp>

#include "modkernel/blocking_sets.h"
#include "modkernel/kernelizer.h"
#include "modkernel/lp_relax.h"

namespace modkernel {

// Reports keep insertion order so output is stable and diffable.
using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const Half& h);
Json to_json(const HalfIntegralSolution& sol);
Json to_json(const BlockingSetReport& report);
Json to_json(const GapReport& gap);
Json to_json(const KernelReport& report);

}  // namespace modkernel
