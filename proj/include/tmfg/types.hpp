#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace tmfg {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

// Undirected edge, stored with a < b.
struct Edge {
  VertexId a = kNoVertex;
  VertexId b = kNoVertex;

  Edge() = default;
  Edge(VertexId x, VertexId y) : a(x < y ? x : y), b(x < y ? y : x) {
    if (x == y) throw std::invalid_argument("edge endpoints must differ");
  }

  auto operator<=>(const Edge&) const = default;
  bool covers(VertexId v) const { return v == a || v == b; }
};

// Triangular face, stored sorted. Lexicographic order on the sorted triple is
// the face order used by every deterministic tie-break.
struct Face {
  std::array<VertexId, 3> v{kNoVertex, kNoVertex, kNoVertex};

  Face() = default;
  Face(VertexId x, VertexId y, VertexId z) : v{x, y, z} {
    if (x == y || y == z || x == z)
      throw std::invalid_argument("face vertices must be distinct");
    if (v[0] > v[1]) std::swap(v[0], v[1]);
    if (v[1] > v[2]) std::swap(v[1], v[2]);
    if (v[0] > v[1]) std::swap(v[0], v[1]);
  }

  auto operator<=>(const Face&) const = default;

  bool contains(VertexId u) const { return u == v[0] || u == v[1] || u == v[2]; }

  // The face vertex not on e; e must be one of the face's edges.
  VertexId opposite(const Edge& e) const {
    for (VertexId u : v)
      if (!e.covers(u)) {
        if (!contains(e.a) || !contains(e.b))
          throw std::invalid_argument("edge is not on the face");
        return u;
      }
    throw std::invalid_argument("edge is not on the face");
  }

  std::array<Edge, 3> edges() const {
    return {Edge(v[0], v[1]), Edge(v[0], v[2]), Edge(v[1], v[2])};
  }
};

}  // namespace tmfg
