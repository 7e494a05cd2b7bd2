#pragma once

#include <functional>
#include <map>
#include <set>

#include "tmfg/types.hpp"

namespace tmfg {

using ScoreFn = std::function<double(VertexId, const Face&)>;

// Best candidate found by GainCache::best().
struct BestMove {
  double gain;
  VertexId vertex;  // kNoVertex when no face has any remaining candidate
  Face face;
};

// Per-face record: the best remaining vertex for that face and its score.
struct FaceGain {
  double max_gain;
  VertexId best_vertex;  // kNoVertex when the remaining pool is empty
};

// One cached (score, vertex) pair per active face. Insertion retires the
// chosen vertex everywhere and rescans only the faces that wanted it plus the
// faces that changed; everything else keeps its cached entry.
//
// Ties break the same way everywhere: higher gain first, then lower vertex
// index, then lexicographically smaller face triple.
class GainCache {
 public:
  // remaining: vertices not yet inserted. Faces start empty; call add_face.
  explicit GainCache(std::set<VertexId> remaining);

  const std::set<VertexId>& remaining() const { return remaining_; }
  const std::map<Face, FaceGain>& entries() const { return entries_; }
  bool has_face(const Face& t) const { return entries_.count(t) != 0; }
  FaceGain entry(const Face& t) const;

  // Scores every remaining vertex against t and stores the winner.
  void add_face(const Face& t, const ScoreFn& score);
  void remove_face(const Face& t);

  // Removes v from the remaining pool and rescans every face whose cached
  // winner was v. Returns the number of faces rescanned.
  int retire(VertexId v, const ScoreFn& score);

  // Full rescan of one face against the current pool.
  void refresh_face(const Face& t, const ScoreFn& score);

  BestMove best() const;

 private:
  FaceGain scan(const Face& t, const ScoreFn& score) const;

  std::set<VertexId> remaining_;
  std::map<Face, FaceGain> entries_;
};

}  // namespace tmfg
