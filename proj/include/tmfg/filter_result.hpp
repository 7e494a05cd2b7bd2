#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tmfg/clique_tree.hpp"
#include "tmfg/triangulation.hpp"
#include "tmfg/types.hpp"

namespace tmfg {

enum class MoveKind { T2, T2Inverse, T1, A, AInverse, S };

std::string_view move_kind_name(MoveKind k);

// One applied move. `gain` is the realized total-weight delta under the
// oracle the move was applied with.
struct MoveRecord {
  MoveKind kind{};
  double gain = 0.0;
  VertexId vertex = kNoVertex;  // inserted/removed vertex, when applicable
  Face face{};                  // consumed face (T2) or restored face (T2 inverse)
  Edge removed_edge{};          // T1 / A / A inverse bookkeeping
  Edge added_edge{};
  std::array<VertexId, 4> clique{kNoVertex, kNoVertex, kNoVertex, kNoVertex};  // S
  std::array<VertexId, 4> relabeled{kNoVertex, kNoVertex, kNoVertex, kNoVertex};
};

struct BuildStats {
  std::map<MoveKind, int> moves_applied;
  std::size_t score_evaluations = 0;
  double elapsed_seconds = 0.0;
};

// Outcome of a filtering build. `p` is the vertex universe of the input
// matrix; for tmfg variants `tri` holds the final face structure (online
// edits need it) and `clique_tree` is present whenever the construction kept
// the graph chordal (base and s always; t1/a only if no flip was applied).
struct FilterResult {
  std::string method;  // "tmfg", "tmfg-t1", "tmfg-s", "tmfg-a", "pmfg"
  int p = 0;
  std::vector<Edge> edges;           // sorted
  std::vector<double> edge_weights;  // parallel to edges
  double total_weight = 0.0;
  std::optional<CliqueTree> clique_tree;
  std::optional<Triangulation> tri;
  BuildStats stats;
  std::vector<MoveRecord> moves;  // in application order (empty if not recorded)
};

}  // namespace tmfg
