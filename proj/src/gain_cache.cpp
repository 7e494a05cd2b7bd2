#include "tmfg/gain_cache.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace tmfg {

GainCache::GainCache(std::set<VertexId> remaining) : remaining_(std::move(remaining)) {}

FaceGain GainCache::entry(const Face& t) const {
  auto it = entries_.find(t);
  if (it == entries_.end()) throw std::invalid_argument("GainCache::entry: face not tracked");
  return it->second;
}

FaceGain GainCache::scan(const Face& t, const ScoreFn& score) const {
  FaceGain g{-std::numeric_limits<double>::infinity(), kNoVertex};
  for (VertexId v : remaining_) {
    double s = score(v, t);
    if (g.best_vertex == kNoVertex || s > g.max_gain) g = {s, v};
  }
  return g;
}

void GainCache::add_face(const Face& t, const ScoreFn& score) {
  entries_[t] = scan(t, score);
}

void GainCache::remove_face(const Face& t) {
  if (entries_.erase(t) == 0)
    throw std::invalid_argument("GainCache::remove_face: face not tracked");
}

int GainCache::retire(VertexId v, const ScoreFn& score) {
  if (remaining_.erase(v) == 0)
    throw std::invalid_argument("GainCache::retire: vertex not in the remaining pool");
  int rescanned = 0;
  for (auto& [face, g] : entries_) {
    if (g.best_vertex != v) continue;
    g = scan(face, score);
    ++rescanned;
  }
  return rescanned;
}

void GainCache::refresh_face(const Face& t, const ScoreFn& score) {
  auto it = entries_.find(t);
  if (it == entries_.end())
    throw std::invalid_argument("GainCache::refresh_face: face not tracked");
  it->second = scan(t, score);
}

BestMove GainCache::best() const {
  BestMove b{-std::numeric_limits<double>::infinity(), kNoVertex, Face{0, 1, 2}};
  bool found = false;
  for (const auto& [face, g] : entries_) {
    if (g.best_vertex == kNoVertex) continue;
    if (!found || g.max_gain > b.gain ||
        (g.max_gain == b.gain && g.best_vertex < b.vertex)) {
      b = {g.max_gain, g.best_vertex, face};
      found = true;
    }
  }
  return b;
}

}  // namespace tmfg
