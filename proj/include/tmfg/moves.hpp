#pragma once

#include <array>

#include "tmfg/exact_sum.hpp"
#include "tmfg/filter_result.hpp"
#include "tmfg/triangulation.hpp"
#include "tmfg/weight_oracle.hpp"

namespace tmfg {

// Local moves on a sphere triangulation. Every function validates its
// preconditions (std::invalid_argument on violation), mutates g in place, and
// returns a record whose gain is the total-weight delta under w. When `total`
// is given, the individual +/- weight terms are pushed into it, so an
// accumulator threaded through a whole move sequence stays an exact sum of
// the surviving edge weights.

// Insert uninserted vertex v into face t: three new edges, t is replaced by
// the three faces around v, and t union {v} becomes a 4-clique.
MoveRecord apply_t2(Triangulation& g, const Face& t, VertexId v, const WeightOracle& w,
                    ExactSum* total = nullptr);

// Remove a degree-3 vertex and restore the face spanned by its neighbors.
MoveRecord apply_t2_inverse(Triangulation& g, VertexId v, const WeightOracle& w,
                            ExactSum* total = nullptr);

// Flip shared_edge to the opposite pair of its two flanking faces. Requires
// the opposite pair to be non-adjacent and both endpoints to keep degree >= 3
// after the flip. May break chordality.
MoveRecord apply_t1(Triangulation& g, const Edge& shared_edge, const WeightOracle& w,
                    ExactSum* total = nullptr);

// Remove shared_edge and insert v adjacent to all four plaquette vertices
// (the two flanking faces' union). Equivalent to a T1 followed by a T2.
MoveRecord apply_a(Triangulation& g, const Edge& shared_edge, VertexId v,
                   const WeightOracle& w, ExactSum* total = nullptr);

// Remove a degree-4 vertex and re-triangulate the quadrilateral hole with one
// absent diagonal: the higher-weight one when both are absent (ties: lower
// vertex-index pair), the only absent one otherwise.
MoveRecord apply_a_inverse(Triangulation& g, VertexId v, const WeightOracle& w,
                           ExactSum* total = nullptr);

// Permute the labels of a 4-clique: relabeled[i] takes the place of
// clique[i]. Edges inside the clique are unchanged as a set; every boundary
// edge (x, m) with x outside becomes (x, image of m). Topology is unchanged,
// so chordality survives; the gain is the re-routing weight delta.
MoveRecord apply_s(Triangulation& g, const std::array<VertexId, 4>& clique,
                   const std::array<VertexId, 4>& relabeled, const WeightOracle& w,
                   ExactSum* total = nullptr);

}  // namespace tmfg
