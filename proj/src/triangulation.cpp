#include "tmfg/triangulation.hpp"

#include <algorithm>
#include <stdexcept>

#include "tmfg/exact_sum.hpp"

namespace tmfg {

namespace {
std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}
std::string face_str(const Face& f) {
  return "{" + std::to_string(f.v[0]) + "," + std::to_string(f.v[1]) + "," +
         std::to_string(f.v[2]) + "}";
}
}  // namespace

Triangulation::Triangulation(int universe, const std::array<VertexId, 4>& seed)
    : p_(universe), adj_(universe) {
  if (universe < 4) throw std::invalid_argument("triangulation universe must be >= 4");
  for (VertexId v : seed) mark_inserted(v);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) add_edge(seed[i], seed[j]);
  add_face(Face(seed[0], seed[1], seed[2]));
  add_face(Face(seed[0], seed[1], seed[3]));
  add_face(Face(seed[0], seed[2], seed[3]));
  add_face(Face(seed[1], seed[2], seed[3]));
}

Triangulation::Triangulation(int universe, std::span<const Edge> edges,
                             std::span<const Face> faces)
    : p_(universe), adj_(universe) {
  if (universe < 4) throw std::invalid_argument("triangulation universe must be >= 4");
  for (const Edge& e : edges) {
    if (!is_inserted(e.a)) mark_inserted(e.a);
    if (!is_inserted(e.b)) mark_inserted(e.b);
    add_edge(e.a, e.b);
  }
  for (const Face& f : faces) add_face(f);
}

void Triangulation::check_vertex(VertexId v) const {
  if (v < 0 || v >= p_)
    throw std::invalid_argument("vertex " + std::to_string(v) + " outside universe [0," +
                                std::to_string(p_) + ")");
}

bool Triangulation::is_inserted(VertexId v) const {
  check_vertex(v);
  return inserted_.count(v) != 0;
}

const std::set<VertexId>& Triangulation::neighbors(VertexId v) const {
  check_vertex(v);
  return adj_[v];
}

int Triangulation::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Triangulation::has_edge(VertexId i, VertexId j) const {
  check_vertex(i);
  check_vertex(j);
  if (i == j) return false;
  return adj_[i].count(j) != 0;
}

bool Triangulation::has_edge(const Edge& e) const { return has_edge(e.a, e.b); }

std::vector<Edge> Triangulation::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_faces_.size());
  for (const auto& [e, _] : edge_faces_) out.push_back(e);
  return out;
}

std::array<Face, 2> Triangulation::faces_of_edge(const Edge& e) const {
  auto it = edge_faces_.find(e);
  if (it == edge_faces_.end())
    throw std::invalid_argument("no such edge " + edge_str(e));
  if (it->second.n != 2)
    throw std::invalid_argument("edge " + edge_str(e) + " has " +
                                std::to_string(it->second.n) + " attached faces, expected 2");
  return it->second.f;
}

int Triangulation::attached_face_count(const Edge& e) const {
  auto it = edge_faces_.find(e);
  if (it == edge_faces_.end())
    throw std::invalid_argument("no such edge " + edge_str(e));
  return it->second.n;
}

std::vector<Face> Triangulation::faces_at(VertexId v) const {
  check_vertex(v);
  std::vector<Face> out;
  const auto& nb = adj_[v];
  for (auto i = nb.begin(); i != nb.end(); ++i)
    for (auto j = std::next(i); j != nb.end(); ++j) {
      Face f(v, *i, *j);
      if (is_face(f)) out.push_back(f);
    }
  std::sort(out.begin(), out.end());
  return out;
}

void Triangulation::mark_inserted(VertexId v) {
  check_vertex(v);
  if (!inserted_.insert(v).second)
    throw std::invalid_argument("vertex " + std::to_string(v) + " already inserted");
}

void Triangulation::unmark_inserted(VertexId v) {
  check_vertex(v);
  if (!adj_[v].empty())
    throw std::invalid_argument("cannot retire vertex " + std::to_string(v) +
                                " with incident edges");
  if (inserted_.erase(v) == 0)
    throw std::invalid_argument("vertex " + std::to_string(v) + " not inserted");
}

void Triangulation::add_edge(VertexId i, VertexId j) {
  Edge e(i, j);
  if (!is_inserted(i) || !is_inserted(j))
    throw std::invalid_argument("edge " + edge_str(e) + " endpoint not inserted");
  if (edge_faces_.count(e))
    throw std::invalid_argument("edge " + edge_str(e) + " already present");
  adj_[i].insert(j);
  adj_[j].insert(i);
  edge_faces_[e] = EdgeFaces{};
}

void Triangulation::remove_edge(const Edge& e) {
  auto it = edge_faces_.find(e);
  if (it == edge_faces_.end())
    throw std::invalid_argument("no such edge " + edge_str(e));
  if (it->second.n != 0)
    throw std::invalid_argument("edge " + edge_str(e) + " still has attached faces");
  adj_[e.a].erase(e.b);
  adj_[e.b].erase(e.a);
  edge_faces_.erase(it);
}

void Triangulation::add_face(const Face& f) {
  if (faces_.count(f))
    throw std::invalid_argument("face " + face_str(f) + " already present");
  std::array<std::map<Edge, EdgeFaces>::iterator, 3> slots;
  int k = 0;
  for (const Edge& e : f.edges()) {
    auto it = edge_faces_.find(e);
    if (it == edge_faces_.end())
      throw std::invalid_argument("face " + face_str(f) + " missing edge " + edge_str(e));
    if (it->second.n >= 2)
      throw std::invalid_argument("edge " + edge_str(e) + " already flanked by two faces");
    slots[k++] = it;
  }
  for (auto it : slots) it->second.f[it->second.n++] = f;
  faces_.insert(f);
}

void Triangulation::remove_face(const Face& f) {
  if (!faces_.erase(f))
    throw std::invalid_argument("no such face " + face_str(f));
  for (const Edge& e : f.edges()) {
    auto& ef = edge_faces_.at(e);
    if (ef.n >= 1 && ef.f[0] == f) {
      ef.f[0] = ef.f[1];
      --ef.n;
    } else if (ef.n == 2 && ef.f[1] == f) {
      --ef.n;
    } else {
      throw std::logic_error("face registry out of sync at edge " + edge_str(e));
    }
  }
}

void Triangulation::relabel(const std::map<VertexId, VertexId>& perm) {
  if (perm.empty()) return;
  std::set<VertexId> keys, images;
  for (const auto& [from, to] : perm) {
    check_vertex(from);
    check_vertex(to);
    if (!is_inserted(from) || !is_inserted(to))
      throw std::invalid_argument("relabel touches a vertex that is not inserted");
    keys.insert(from);
    images.insert(to);
  }
  if (keys != images)
    throw std::invalid_argument("relabel map is not a permutation of its keys");

  auto img = [&](VertexId v) {
    auto it = perm.find(v);
    return it == perm.end() ? v : it->second;
  };

  std::vector<Face> old_faces;
  for (const Face& f : faces_)
    for (VertexId k : keys)
      if (f.contains(k)) {
        old_faces.push_back(f);
        break;
      }
  std::vector<Edge> old_edges;
  for (VertexId k : keys)
    for (VertexId n : adj_[k]) old_edges.push_back(Edge(k, n));
  std::sort(old_edges.begin(), old_edges.end());
  old_edges.erase(std::unique(old_edges.begin(), old_edges.end()), old_edges.end());

  for (const Face& f : old_faces) remove_face(f);
  for (const Edge& e : old_edges) remove_edge(e);
  for (const Edge& e : old_edges) add_edge(img(e.a), img(e.b));
  for (const Face& f : old_faces) add_face(Face(img(f.v[0]), img(f.v[1]), img(f.v[2])));
}

VerifyReport verify_sphere_triangulation(const Triangulation& g) {
  VerifyReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.violations.push_back(std::move(msg));
  };

  int n = g.vertex_count();
  if (n < 4) fail("fewer than 4 vertices inserted");
  int expect_e = 3 * n - 6, expect_f = 2 * n - 4;
  if (g.edge_count() != expect_e)
    fail("edge count " + std::to_string(g.edge_count()) + ", expected " +
         std::to_string(expect_e));
  if (g.face_count() != expect_f)
    fail("face count " + std::to_string(g.face_count()) + ", expected " +
         std::to_string(expect_f));

  // Recount faces per edge directly from the registry.
  std::map<Edge, int> per_edge;
  for (const Face& f : g.faces()) {
    for (VertexId v : f.v)
      if (!g.is_inserted(v)) fail("face " + face_str(f) + " uses uninserted vertex");
    for (const Edge& e : f.edges()) {
      if (!g.has_edge(e)) fail("face " + face_str(f) + " missing edge " + edge_str(e));
      ++per_edge[e];
    }
  }
  for (const Edge& e : g.edges()) {
    auto it = per_edge.find(e);
    int c = it == per_edge.end() ? 0 : it->second;
    if (c != 2)
      fail("edge " + edge_str(e) + " lies in " + std::to_string(c) + " faces, expected 2");
  }
  for (const auto& [e, c] : per_edge)
    if (!g.has_edge(e)) fail("face registry references absent edge " + edge_str(e));

  for (VertexId v : g.inserted())
    if (g.degree(v) < 3)
      fail("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
  for (VertexId v = 0; v < g.universe(); ++v)
    if (!g.is_inserted(v) && g.degree(v) != 0)
      fail("uninserted vertex " + std::to_string(v) + " has incident edges");
  return r;
}

double total_weight(const Triangulation& g, const WeightOracle& w) {
  ExactSum s;
  for (const Edge& e : g.edges()) s.add(w.weight(e));
  return s.round();
}

double total_weight(std::span<const Edge> edges, const WeightOracle& w) {
  ExactSum s;
  for (const Edge& e : edges) s.add(w.weight(e));
  return s.round();
}

}  // namespace tmfg
