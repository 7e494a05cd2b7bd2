#pragma once

#include <initializer_list>
#include <set>
#include <vector>

#include "tmfg/synth.hpp"
#include "tmfg/types.hpp"
#include "tmfg/weight_oracle.hpp"

namespace tmfg::test {

struct WeightedPair {
  VertexId i;
  VertexId j;
  double w;
};

// Dense symmetric matrix with the given off-diagonal entries, zero elsewhere.
inline DenseWeightOracle sparse_weights(int p, const std::vector<WeightedPair>& entries) {
  std::vector<double> m(static_cast<std::size_t>(p) * p, 0.0);
  for (const auto& e : entries) {
    m[static_cast<std::size_t>(e.i) * p + e.j] = e.w;
    m[static_cast<std::size_t>(e.j) * p + e.i] = e.w;
  }
  return DenseWeightOracle(p, m);
}

inline DenseWeightOracle constant_weights(int p, double w) {
  std::vector<double> m(static_cast<std::size_t>(p) * p, w);
  for (int i = 0; i < p; ++i) m[static_cast<std::size_t>(i) * p + i] = 0.0;
  return DenseWeightOracle(p, m);
}

// Uniform [0,1) entries, reproducible.
inline DenseWeightOracle uniform_weights(int p, std::uint64_t seed) {
  MatrixSpec spec;
  spec.family = Family::Uniform;
  spec.p = p;
  spec.seed = seed;
  const auto oracle = generate(spec);
  std::vector<double> m(static_cast<std::size_t>(p) * p, 0.0);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i != j) m[static_cast<std::size_t>(i) * p + j] = oracle->weight(i, j);
  return DenseWeightOracle(p, m);
}

inline std::set<Edge> edge_set(const std::vector<Edge>& edges) {
  return {edges.begin(), edges.end()};
}

}  // namespace tmfg::test
