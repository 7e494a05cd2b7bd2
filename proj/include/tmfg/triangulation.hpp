#pragma once

#include <array>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tmfg/types.hpp"
#include "tmfg/weight_oracle.hpp"

namespace tmfg {

// Planar triangulation of the sphere under construction. Holds adjacency, the
// explicit face registry, and the (at most two) faces flanking each edge.
// Mutation happens through the small primitives below, which enforce local
// consistency (an edge can only be removed once detached from faces, a face
// needs its three edges present, and so on); the move layer composes them.
// Vertex ids live in a fixed universe [0, p); "inserted" marks membership.
class Triangulation {
 public:
  // Seed tetrahedron on four distinct vertices of the universe.
  Triangulation(int universe, const std::array<VertexId, 4>& seed);
  // Rebuild from an explicit edge and face list (online edits, tests).
  Triangulation(int universe, std::span<const Edge> edges, std::span<const Face> faces);

  int universe() const { return p_; }
  int vertex_count() const { return static_cast<int>(inserted_.size()); }
  bool is_inserted(VertexId v) const;
  const std::set<VertexId>& inserted() const { return inserted_; }

  const std::set<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const;
  bool has_edge(VertexId i, VertexId j) const;
  bool has_edge(const Edge& e) const;
  int edge_count() const { return static_cast<int>(edge_faces_.size()); }
  std::vector<Edge> edges() const;

  const std::set<Face>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  bool is_face(const Face& f) const { return faces_.count(f) != 0; }
  // Both faces flanking e; throws unless exactly two are attached.
  std::array<Face, 2> faces_of_edge(const Edge& e) const;
  int attached_face_count(const Edge& e) const;
  // Faces incident to v, in face order.
  std::vector<Face> faces_at(VertexId v) const;

  // Primitives. Each throws std::invalid_argument on a consistency violation.
  void mark_inserted(VertexId v);
  void unmark_inserted(VertexId v);  // requires degree 0
  void add_edge(VertexId i, VertexId j);
  void remove_edge(const Edge& e);  // requires no attached faces
  void add_face(const Face& f);     // requires all three edges, each with < 2 faces
  void remove_face(const Face& f);

  // Relabel vertices according to `perm` (key -> image, a bijection on its key
  // set, identity elsewhere). Re-routes every incident edge and face in one
  // local rebuild; topology is untouched.
  void relabel(const std::map<VertexId, VertexId>& perm);

 private:
  struct EdgeFaces {
    int n = 0;
    std::array<Face, 2> f{};
  };

  void check_vertex(VertexId v) const;

  int p_;
  std::vector<std::set<VertexId>> adj_;
  std::set<VertexId> inserted_;
  std::set<Face> faces_;
  std::map<Edge, EdgeFaces> edge_faces_;
};

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Recounts everything from scratch (edge and face counts, the two-faces-per-
// edge law, adjacency consistency, minimum degree). Diagnostic only.
VerifyReport verify_sphere_triangulation(const Triangulation& g);

// Correctly rounded sum of retained edge weights (see ExactSum).
double total_weight(const Triangulation& g, const WeightOracle& w);
double total_weight(std::span<const Edge> edges, const WeightOracle& w);

}  // namespace tmfg
