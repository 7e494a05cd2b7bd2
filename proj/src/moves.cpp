#include "tmfg/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tmfg {

namespace {

void push(ExactSum* total, double term) {
  if (total) total->add(term);
}

}  // namespace

MoveRecord apply_t2(Triangulation& g, const Face& t, VertexId v, const WeightOracle& w,
                    ExactSum* total) {
  if (!g.is_face(t))
    throw std::invalid_argument("t2: target is not a face of the triangulation");
  if (g.is_inserted(v))
    throw std::invalid_argument("t2: vertex " + std::to_string(v) + " already inserted");

  double gain = 0.0;
  for (VertexId u : t.v) {
    double term = w.weight(v, u);
    gain += term;
    push(total, term);
  }

  g.mark_inserted(v);
  for (VertexId u : t.v) g.add_edge(v, u);
  g.remove_face(t);
  g.add_face(Face(v, t.v[0], t.v[1]));
  g.add_face(Face(v, t.v[0], t.v[2]));
  g.add_face(Face(v, t.v[1], t.v[2]));

  MoveRecord r;
  r.kind = MoveKind::T2;
  r.gain = gain;
  r.vertex = v;
  r.face = t;
  return r;
}

MoveRecord apply_t2_inverse(Triangulation& g, VertexId v, const WeightOracle& w,
                            ExactSum* total) {
  if (!g.is_inserted(v))
    throw std::invalid_argument("t2 inverse: vertex not inserted");
  if (g.degree(v) != 3)
    throw std::invalid_argument("t2 inverse: vertex " + std::to_string(v) + " has degree " +
                                std::to_string(g.degree(v)) + ", expected 3");
  if (g.vertex_count() <= 4)
    throw std::invalid_argument("t2 inverse: removal would leave fewer than 4 vertices");

  auto nb = g.neighbors(v);
  auto it = nb.begin();
  VertexId a = *it++, b = *it++, c = *it;
  Face link(a, b, c);
  for (const Edge& e : link.edges())
    if (!g.has_edge(e))
      throw std::invalid_argument("t2 inverse: neighbors of " + std::to_string(v) +
                                  " do not span a triangle");
  for (const Face& f : {Face(v, a, b), Face(v, a, c), Face(v, b, c)})
    if (!g.is_face(f))
      throw std::invalid_argument("t2 inverse: vertex " + std::to_string(v) +
                                  " is not enclosed by its three faces");

  double gain = 0.0;
  for (VertexId u : link.v) {
    double term = w.weight(v, u);
    gain -= term;
    push(total, -term);
  }

  g.remove_face(Face(v, a, b));
  g.remove_face(Face(v, a, c));
  g.remove_face(Face(v, b, c));
  for (VertexId u : link.v) g.remove_edge(Edge(v, u));
  g.unmark_inserted(v);
  g.add_face(link);

  MoveRecord r;
  r.kind = MoveKind::T2Inverse;
  r.gain = gain;
  r.vertex = v;
  r.face = link;
  return r;
}

MoveRecord apply_t1(Triangulation& g, const Edge& shared_edge, const WeightOracle& w,
                    ExactSum* total) {
  auto fs = g.faces_of_edge(shared_edge);
  VertexId x = fs[0].opposite(shared_edge);
  VertexId y = fs[1].opposite(shared_edge);
  if (x == y) throw std::logic_error("t1: flanking faces coincide");
  if (g.has_edge(x, y))
    throw std::invalid_argument("t1: opposite pair (" + std::to_string(x) + "," +
                                std::to_string(y) + ") already adjacent");
  if (g.degree(shared_edge.a) < 4 || g.degree(shared_edge.b) < 4)
    throw std::invalid_argument("t1: shared edge endpoint would drop below degree 3");

  double gained = w.weight(x, y);
  double lost = w.weight(shared_edge);
  push(total, gained);
  push(total, -lost);

  g.remove_face(fs[0]);
  g.remove_face(fs[1]);
  g.remove_edge(shared_edge);
  g.add_edge(x, y);
  g.add_face(Face(x, y, shared_edge.a));
  g.add_face(Face(x, y, shared_edge.b));

  MoveRecord r;
  r.kind = MoveKind::T1;
  r.gain = gained - lost;
  r.removed_edge = shared_edge;
  r.added_edge = Edge(x, y);
  return r;
}

MoveRecord apply_a(Triangulation& g, const Edge& shared_edge, VertexId v,
                   const WeightOracle& w, ExactSum* total) {
  if (g.is_inserted(v))
    throw std::invalid_argument("a: vertex " + std::to_string(v) + " already inserted");
  auto fs = g.faces_of_edge(shared_edge);
  VertexId x = fs[0].opposite(shared_edge);
  VertexId y = fs[1].opposite(shared_edge);
  if (g.degree(shared_edge.a) < 4 || g.degree(shared_edge.b) < 4)
    throw std::invalid_argument("a: shared edge endpoint would drop below degree 3");

  // Plaquette cycle: a - x - b - y.
  double gain = 0.0;
  for (VertexId u : {shared_edge.a, x, shared_edge.b, y}) {
    double term = w.weight(v, u);
    gain += term;
    push(total, term);
  }
  double lost = w.weight(shared_edge);
  gain -= lost;
  push(total, -lost);

  g.remove_face(fs[0]);
  g.remove_face(fs[1]);
  g.remove_edge(shared_edge);
  g.mark_inserted(v);
  for (VertexId u : {shared_edge.a, x, shared_edge.b, y}) g.add_edge(v, u);
  g.add_face(Face(v, shared_edge.a, x));
  g.add_face(Face(v, x, shared_edge.b));
  g.add_face(Face(v, shared_edge.b, y));
  g.add_face(Face(v, y, shared_edge.a));

  MoveRecord r;
  r.kind = MoveKind::A;
  r.gain = gain;
  r.vertex = v;
  r.removed_edge = shared_edge;
  return r;
}

MoveRecord apply_a_inverse(Triangulation& g, VertexId v, const WeightOracle& w,
                           ExactSum* total) {
  if (!g.is_inserted(v))
    throw std::invalid_argument("a inverse: vertex not inserted");
  if (g.degree(v) != 4)
    throw std::invalid_argument("a inverse: vertex " + std::to_string(v) + " has degree " +
                                std::to_string(g.degree(v)) + ", expected 4");
  if (g.vertex_count() <= 4)
    throw std::invalid_argument("a inverse: removal would leave fewer than 4 vertices");

  auto ring = g.faces_at(v);
  if (ring.size() != 4)
    throw std::invalid_argument("a inverse: vertex is not enclosed by four faces");

  // Recover the neighbor cycle from the four faces around v.
  std::map<VertexId, std::vector<VertexId>> partner;
  for (const Face& f : ring) {
    VertexId s[2];
    int k = 0;
    for (VertexId u : f.v)
      if (u != v) s[k++] = u;
    partner[s[0]].push_back(s[1]);
    partner[s[1]].push_back(s[0]);
  }
  for (const auto& [u, ps] : partner)
    if (ps.size() != 2)
      throw std::invalid_argument("a inverse: faces around vertex do not form a wheel");

  std::array<VertexId, 4> c{};
  c[0] = partner.begin()->first;
  c[1] = std::min(partner[c[0]][0], partner[c[0]][1]);
  c[2] = partner[c[1]][0] == c[0] ? partner[c[1]][1] : partner[c[1]][0];
  c[3] = partner[c[2]][0] == c[1] ? partner[c[2]][1] : partner[c[2]][0];
  bool closes = c[3] != c[0] && c[3] != c[1] &&
                ((partner[c[3]][0] == c[2] && partner[c[3]][1] == c[0]) ||
                 (partner[c[3]][0] == c[0] && partner[c[3]][1] == c[2]));
  if (!closes) throw std::invalid_argument("a inverse: neighbor cycle does not close");

  Edge d1(c[0], c[2]), d2(c[1], c[3]);
  bool have1 = g.has_edge(d1), have2 = g.has_edge(d2);
  if (have1 && have2)
    throw std::invalid_argument("a inverse: both diagonals already present");
  Edge diag = d1;
  if (have1) {
    diag = d2;
  } else if (!have2) {
    double w1 = w.weight(d1), w2 = w.weight(d2);
    if (w2 > w1 || (w1 == w2 && d2 < d1)) diag = d2;
  }

  double gain = 0.0;
  for (VertexId u : c) {
    double term = w.weight(v, u);
    gain -= term;
    push(total, -term);
  }
  double gained = w.weight(diag);
  gain += gained;
  push(total, gained);

  for (const Face& f : ring) g.remove_face(f);
  for (VertexId u : c) g.remove_edge(Edge(v, u));
  g.unmark_inserted(v);
  g.add_edge(diag.a, diag.b);
  if (diag == d1) {
    g.add_face(Face(c[0], c[1], c[2]));
    g.add_face(Face(c[0], c[2], c[3]));
  } else {
    g.add_face(Face(c[0], c[1], c[3]));
    g.add_face(Face(c[1], c[2], c[3]));
  }

  MoveRecord r;
  r.kind = MoveKind::AInverse;
  r.gain = gain;
  r.vertex = v;
  r.added_edge = diag;
  return r;
}

MoveRecord apply_s(Triangulation& g, const std::array<VertexId, 4>& clique,
                   const std::array<VertexId, 4>& relabeled, const WeightOracle& w,
                   ExactSum* total) {
  std::set<VertexId> cset(clique.begin(), clique.end());
  std::set<VertexId> rset(relabeled.begin(), relabeled.end());
  if (cset.size() != 4)
    throw std::invalid_argument("s: clique vertices must be distinct");
  if (rset != cset)
    throw std::invalid_argument("s: relabeling is not a permutation of the clique");
  for (VertexId u : clique)
    if (!g.is_inserted(u))
      throw std::invalid_argument("s: clique vertex " + std::to_string(u) + " not inserted");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!g.has_edge(clique[i], clique[j]))
        throw std::invalid_argument("s: vertices do not span a 4-clique");

  std::map<VertexId, VertexId> perm;
  for (int i = 0; i < 4; ++i)
    if (clique[i] != relabeled[i]) perm[clique[i]] = relabeled[i];

  double gain = 0.0;
  for (const auto& [m, tgt] : perm)
    for (VertexId x : g.neighbors(m)) {
      if (cset.count(x)) continue;
      double gained = w.weight(x, tgt), lost = w.weight(x, m);
      gain += gained - lost;
      push(total, gained);
      push(total, -lost);
    }

  g.relabel(perm);

  MoveRecord r;
  r.kind = MoveKind::S;
  r.gain = gain;
  r.clique = clique;
  r.relabeled = relabeled;
  return r;
}

}  // namespace tmfg
