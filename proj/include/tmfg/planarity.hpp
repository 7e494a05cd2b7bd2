#pragma once

#include <memory>
#include <span>

#include "tmfg/types.hpp"

namespace tmfg {

// Linear-time planarity queries against a growing graph. One instance holds
// the accepted edges; each query tests the graph plus one candidate.
class PlanarityTester {
 public:
  explicit PlanarityTester(int p);
  ~PlanarityTester();
  PlanarityTester(PlanarityTester&& other) noexcept;
  PlanarityTester& operator=(PlanarityTester&& other) noexcept;

  int dimension() const;
  int edge_count() const;

  // True iff the held graph stays planar with (i, j) added; the graph is
  // unchanged afterwards.
  bool can_add(VertexId i, VertexId j);
  // can_add that commits the edge when the answer is yes.
  bool try_add(VertexId i, VertexId j);

  bool is_planar() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// One-shot test of an explicit edge list.
bool is_planar(int p, std::span<const Edge> edges);

}  // namespace tmfg
