#include <cmath>
#include <limits>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "tmfg/gain_cache.hpp"
#include "tmfg/moves.hpp"
#include "tmfg/tmfg.hpp"
#include "tmfg/triangulation.hpp"

using namespace tmfg;

namespace {

ScoreFn sum_score(const WeightOracle& w) {
  return [&w](VertexId v, const Face& t) {
    return w.weight(v, t.v[0]) + w.weight(v, t.v[1]) + w.weight(v, t.v[2]);
  };
}

std::array<Face, 4> seed_faces(const std::array<VertexId, 4>& s) {
  return {Face(s[0], s[1], s[2]), Face(s[0], s[1], s[3]), Face(s[0], s[2], s[3]),
          Face(s[1], s[2], s[3])};
}

}  // namespace

TEST_CASE("add_face caches the highest-scoring remaining vertex") {
  const auto w = test::sparse_weights(8, {{4, 0, 10}, {4, 1, 10}, {4, 2, 10},
                                          {5, 0, 9},  {5, 1, 9},  {5, 3, 9},
                                          {6, 0, 8},  {6, 2, 8},  {6, 3, 8},
                                          {7, 1, 7},  {7, 2, 7},  {7, 3, 7}});
  GainCache cache({4, 5, 6, 7});
  const auto score = sum_score(w);
  for (const Face& t : seed_faces({0, 1, 2, 3})) cache.add_face(t, score);

  CHECK(cache.entry(Face(0, 1, 2)).best_vertex == 4);
  CHECK(cache.entry(Face(0, 1, 2)).max_gain == 30.0);
  CHECK(cache.entry(Face(0, 1, 3)).best_vertex == 5);
  CHECK(cache.entry(Face(0, 2, 3)).best_vertex == 6);
  CHECK(cache.entry(Face(1, 2, 3)).best_vertex == 7);

  const BestMove b = cache.best();
  CHECK(b.vertex == 4);
  CHECK(b.gain == 30.0);
  CHECK(b.face == Face(0, 1, 2));
}

TEST_CASE("score ties go to the lowest vertex, then the smallest face") {
  const auto ones = test::constant_weights(8, 1.0);
  const auto score = sum_score(ones);

  GainCache cache({5, 4, 7, 6});
  cache.add_face(Face(0, 1, 3), score);
  cache.add_face(Face(0, 1, 2), score);

  CHECK(cache.entry(Face(0, 1, 2)).best_vertex == 4);
  CHECK(cache.entry(Face(0, 1, 3)).best_vertex == 4);

  const BestMove b = cache.best();
  CHECK(b.vertex == 4);
  CHECK(b.face == Face(0, 1, 2));
}

TEST_CASE("a strictly higher gain beats the face order") {
  const auto w = test::sparse_weights(8, {{4, 3, 2.5}});
  GainCache cache({4});
  const auto score = sum_score(w);
  cache.add_face(Face(0, 1, 2), score);  // gain 0
  cache.add_face(Face(0, 1, 3), score);  // gain 2.5

  const BestMove b = cache.best();
  CHECK(b.face == Face(0, 1, 3));
  CHECK(b.gain == 2.5);
}

TEST_CASE("an empty pool yields sentinel entries") {
  GainCache cache(std::set<VertexId>{});
  const auto ones = test::constant_weights(6, 1.0);
  cache.add_face(Face(0, 1, 2), sum_score(ones));

  const FaceGain g = cache.entry(Face(0, 1, 2));
  CHECK(g.best_vertex == kNoVertex);
  CHECK(std::isinf(g.max_gain));
  CHECK(g.max_gain < 0);
  CHECK(cache.best().vertex == kNoVertex);
}

TEST_CASE("lookups and edits on untracked state are rejected") {
  GainCache cache({4, 5});
  const auto ones = test::constant_weights(8, 1.0);
  const auto score = sum_score(ones);
  cache.add_face(Face(0, 1, 2), score);

  CHECK_THROWS_AS(cache.entry(Face(0, 1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(cache.remove_face(Face(0, 1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(cache.refresh_face(Face(0, 1, 3), score), std::invalid_argument);
  CHECK_THROWS_AS(cache.retire(9, score), std::invalid_argument);

  CHECK(cache.retire(4, score) == 1);
  CHECK(cache.remaining() == std::set<VertexId>{5});
  CHECK_THROWS_AS(cache.retire(4, score), std::invalid_argument);
}

TEST_CASE("retire rescans exactly the faces that cached the vertex") {
  const auto w = test::sparse_weights(8, {{4, 0, 10}, {4, 1, 10}, {4, 2, 10}, {4, 3, 10},
                                          {5, 0, 1},  {6, 1, 1},  {7, 2, 1}});
  GainCache cache({4, 5, 6, 7});
  const auto score = sum_score(w);
  for (const Face& t : seed_faces({0, 1, 2, 3})) cache.add_face(t, score);
  for (const Face& t : seed_faces({0, 1, 2, 3})) CHECK(cache.entry(t).best_vertex == 4);

  CHECK(cache.retire(4, score) == 4);
  CHECK(cache.entry(Face(0, 1, 2)).best_vertex == 5);
  CHECK(cache.entry(Face(1, 2, 3)).best_vertex == 6);
}

TEST_CASE("refresh_cache touches only the consumed face and the new ones") {
  const auto w = test::sparse_weights(8, {{4, 0, 10}, {4, 1, 10}, {4, 2, 10},
                                          {5, 0, 9},  {5, 1, 9},  {5, 3, 9},
                                          {6, 0, 8},  {6, 2, 8},  {6, 3, 8},
                                          {7, 1, 7},  {7, 2, 7},  {7, 3, 7}});
  GainCache cache({4, 5, 6, 7});
  const auto score = sum_score(w);
  for (const Face& t : seed_faces({0, 1, 2, 3})) cache.add_face(t, score);

  // Winner of face (0,1,2) is 4 and no other face caches it.
  const std::array<Face, 3> created = {Face(0, 1, 4), Face(0, 2, 4), Face(1, 2, 4)};
  const RefreshStats stats = refresh_cache(cache, 4, Face(0, 1, 2), created, score);
  CHECK(stats.faces_rescanned == 0);

  CHECK(!cache.has_face(Face(0, 1, 2)));
  CHECK(cache.entries().size() == 6);
  CHECK(cache.remaining() == std::set<VertexId>{5, 6, 7});
  for (const Face& t : created) CHECK(cache.entry(t).best_vertex != kNoVertex);

  // Untouched faces keep winners computed against the shrunken pool.
  CHECK(cache.entry(Face(0, 1, 3)).best_vertex == 5);
  CHECK(cache.entry(Face(0, 2, 3)).best_vertex == 6);
  CHECK(cache.entry(Face(1, 2, 3)).best_vertex == 7);
}

TEST_CASE("refresh_cache reports rescans when the winner was shared") {
  const auto w = test::sparse_weights(8, {{4, 0, 10}, {4, 1, 10}, {4, 2, 10}, {4, 3, 10},
                                          {5, 0, 1},  {6, 1, 1},  {7, 2, 1}});
  GainCache cache({4, 5, 6, 7});
  const auto score = sum_score(w);
  for (const Face& t : seed_faces({0, 1, 2, 3})) cache.add_face(t, score);

  const std::array<Face, 3> created = {Face(0, 1, 4), Face(0, 2, 4), Face(1, 2, 4)};
  const RefreshStats stats = refresh_cache(cache, 4, Face(0, 1, 2), created, score);
  CHECK(stats.faces_rescanned == 3);
}

TEST_CASE("a cache-driven build matches a full rescan at every step") {
  const int p = 12;
  const auto w = test::uniform_weights(p, 777);
  const auto score = sum_score(w);

  const std::array<VertexId, 4> seed = {0, 1, 2, 3};
  Triangulation g(p, seed);
  std::set<VertexId> pool;
  for (VertexId v = 4; v < p; ++v) pool.insert(v);
  GainCache cache(pool);
  for (const Face& t : seed_faces(seed)) cache.add_face(t, score);

  for (int step = 0; step < p - 4; ++step) {
    // Reference: scan every (face, candidate) pair with the same tie rules.
    BestMove want{-std::numeric_limits<double>::infinity(), kNoVertex, Face(0, 1, 2)};
    for (const Face& t : g.faces()) {
      for (VertexId v : cache.remaining()) {
        const double s = score(v, t);
        if (want.vertex == kNoVertex || s > want.gain ||
            (s == want.gain && v < want.vertex)) {
          want = {s, v, t};
        }
      }
    }

    const BestMove got = cache.best();
    REQUIRE(got.vertex == want.vertex);
    CHECK(got.gain == want.gain);
    CHECK(got.face == want.face);

    apply_t2(g, got.face, got.vertex, w);
    const std::array<Face, 3> created = {Face(got.vertex, got.face.v[0], got.face.v[1]),
                                         Face(got.vertex, got.face.v[0], got.face.v[2]),
                                         Face(got.vertex, got.face.v[1], got.face.v[2])};
    refresh_cache(cache, got.vertex, got.face, created, score);

    // Every cached entry must agree with a from-scratch rescan.
    REQUIRE(cache.entries().size() == g.faces().size());
    for (const auto& [face, cached] : cache.entries()) {
      CHECK(g.is_face(face));
      FaceGain fresh{-std::numeric_limits<double>::infinity(), kNoVertex};
      for (VertexId v : cache.remaining()) {
        const double s = score(v, face);
        if (fresh.best_vertex == kNoVertex || s > fresh.max_gain) fresh = {s, v};
      }
      CHECK(cached.best_vertex == fresh.best_vertex);
      CHECK(cached.max_gain == fresh.max_gain);
    }
  }

  CHECK(cache.remaining().empty());
  CHECK(cache.best().vertex == kNoVertex);
  CHECK(g.edge_count() == 3 * p - 6);
  CHECK(g.face_count() == 2 * p - 4);
}
