#pragma once

#include <array>
#include <vector>

#include "tmfg/types.hpp"

namespace tmfg {

// Construction-order clique tree of a T2-built triangulation: cliques[0] is
// the seed tetrahedron; clique i (i > 0) was created by inserting its newest
// vertex into the face separators[i-1], which belonged to cliques[parent[i]].
// A graph on n vertices carries n-3 cliques and n-4 separators.
struct CliqueTree {
  std::vector<std::array<VertexId, 4>> cliques;     // each sorted ascending
  std::vector<std::array<VertexId, 3>> separators;  // separators[i-1] goes with clique i
  std::vector<int> parent;                          // parent[0] == -1

  int size() const { return static_cast<int>(cliques.size()); }
};

}  // namespace tmfg
