#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "tmfg/filter_result.hpp"
#include "tmfg/gain_cache.hpp"
#include "tmfg/scores.hpp"
#include "tmfg/weight_oracle.hpp"

namespace tmfg {

// Base: greedy T2 insertions only (chordal output, clique tree).
// T1:   base schedule plus an edge-flip sweep around each insertion.
// S:    base schedule plus a label-permutation pass on each new 4-clique.
// A:    per step, the best plaquette insertion competes with the best T2;
//       each insertion is followed by the T1 sweep.
enum class Variant { Base, T1, S, A };

std::string_view variant_name(Variant v);  // "tmfg", "tmfg-t1", "tmfg-s", "tmfg-a"
Variant variant_from_name(std::string_view name);

enum class SeedStrategy { GreedyExpansion, Exhaustive };

struct BuildConfig {
  Variant variant = Variant::Base;
  // Vertex-selection score; sum of oracle weights when absent. The Gaussian
  // entropy score is only accepted for the base variant (the optimization
  // passes of the others are defined on edge weights).
  std::optional<ScoreFunction> score;
  SeedStrategy seed_strategy = SeedStrategy::GreedyExpansion;
  int exhaustive_seed_limit = 64;
  int t1_sweep_cap = 10;  // flips per insertion (t1/a variants)
  bool record_moves = false;
};

// Exhaustive: best of all C(p,4) tetrahedra by summed edge weight (p must not
// exceed the limit). Greedy expansion: heaviest edge, then twice the vertex
// with the largest total weight to the set so far. Ties: lowest index.
std::array<VertexId, 4> select_seed_clique(const WeightOracle& w, SeedStrategy strategy,
                                           int exhaustive_limit = 64);

FilterResult build_tmfg(const WeightOracle& w, const BuildConfig& cfg = {});

struct RefreshStats {
  int faces_rescanned = 0;  // faces whose cached winner was the inserted vertex
};

// Cache maintenance for one T2: drop the consumed face, retire the inserted
// vertex (rescanning only the faces that cached it), score the three new
// faces. Every other entry is left untouched.
RefreshStats refresh_cache(GainCache& cache, VertexId inserted, const Face& removed_face,
                           const std::array<Face, 3>& new_faces, const ScoreFn& score);

// Attach one vertex (id = result.p) to a finished build by the best T2 over
// all current faces, scored by the sum of the new row's weights on each face.
// Requires a result that kept its triangulation and clique tree.
FilterResult insert_vertex_online(const FilterResult& result,
                                  std::span<const double> new_weights);

// Detach a degree-3 or degree-4 vertex by the matching inverse move. The
// oracle supplies the weight of a restored diagonal; degrees above 4 are not
// removable by a single local move and are rejected.
FilterResult remove_vertex_online(const FilterResult& result, VertexId v,
                                  const WeightOracle& w);

}  // namespace tmfg
