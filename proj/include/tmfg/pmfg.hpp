#pragma once

#include <vector>

#include "tmfg/filter_result.hpp"
#include "tmfg/weight_oracle.hpp"

namespace tmfg {

struct PlanarGraph {
  int p = 0;
  std::vector<Edge> edges;
};

// True iff g plus the candidate edge is still planar.
bool is_planar(const PlanarGraph& g, const Edge& candidate);

// Greedy baseline: every pair in non-increasing weight order (ties broken by
// the lexicographically smaller pair), kept when planarity survives, stopping
// once the 3p-6 bound is reached.
FilterResult build_pmfg(const WeightOracle& w);

}  // namespace tmfg
